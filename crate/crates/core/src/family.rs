//! Standard diagrams for the (2, 2n) torus links, twist knots and
//! three-strand pretzel knots, with their braid indices.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{braid_closure, DiagramBuilder, Over, PlanarDiagram, Port};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// (2, 2n) torus link, `n ≥ 1`.
    Torus2 { n: usize },
    /// Twist knot with `n ≥ 3` crossings.
    Twist { n: usize },
    /// Pretzel knot with columns of 2k+1, 2m+1, 2n+1 crossings.
    Pretzel { k: usize, m: usize, n: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Torus2 { n } if n < 1 => Err(Error::InvalidParameter("torus2 needs n >= 1".into())),
            FamilySpec::Twist { n } if n < 3 => Err(Error::InvalidParameter("twist needs n >= 3 crossings".into())),
            _ => Ok(()),
        }
    }

    pub fn crossing_number(&self) -> usize {
        match *self {
            FamilySpec::Torus2 { n } => 2 * n,
            FamilySpec::Twist { n } => n,
            FamilySpec::Pretzel { k, m, n } => 2 * (k + m + n) + 3,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Torus2 { n } => write!(f, "torus2({n})"),
            FamilySpec::Twist { n } => write!(f, "twist({n})"),
            FamilySpec::Pretzel { k, m, n } => write!(f, "pretzel({k},{m},{n})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `torus2(2)`, `twist(5)`, `pretzel(1,0,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse family {s:?}"));
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args: Vec<usize> = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let f = match (name, args.as_slice()) {
            ("torus2", [n]) => FamilySpec::Torus2 { n: *n },
            ("twist", [n]) => FamilySpec::Twist { n: *n },
            ("pretzel", [k, m, n]) => FamilySpec::Pretzel { k: *k, m: *m, n: *n },
            _ => return Err(bad()),
        };
        f.validate()?;
        Ok(f)
    }
}

/// Braid index of the family member: n+1, (Cr+1)/2 or Cr/2+1, and 2+k+m+n.
pub fn family_braid_index(f: &FamilySpec) -> Result<usize> {
    f.validate()?;
    Ok(match *f {
        FamilySpec::Torus2 { n } => n + 1,
        FamilySpec::Twist { n } if n % 2 == 1 => (n + 1) / 2,
        FamilySpec::Twist { n } => n / 2 + 1,
        FamilySpec::Pretzel { k, m, n } => 2 + k + m + n,
    })
}

/// Vertical twist columns placed side by side, neighbours joined at the top
/// and bottom, the outer columns joined around the outside.
fn pretzel_columns(columns: &[usize]) -> Result<PlanarDiagram> {
    let mut b = DiagramBuilder::new();
    let mut ends = Vec::new();
    for &len in columns {
        let ids: Vec<usize> = (0..len).map(|_| b.crossing(Over::Rising)).collect();
        for w in ids.windows(2) {
            b.connect((w[0], Port::NW), (w[1], Port::SW));
            b.connect((w[0], Port::NE), (w[1], Port::SE));
        }
        ends.push((ids[0], ids[len - 1]));
    }
    for w in ends.windows(2) {
        let ((_, top_l), (_, top_r)) = (w[0], w[1]);
        let ((bot_l, _), (bot_r, _)) = (w[0], w[1]);
        b.connect((top_l, Port::NE), (top_r, Port::NW));
        b.connect((bot_l, Port::SE), (bot_r, Port::SW));
    }
    let (first, last) = (ends[0], ends[ends.len() - 1]);
    b.connect((first.1, Port::NW), (last.1, Port::NE));
    b.connect((first.0, Port::SW), (last.0, Port::SE));
    b.build()
}

/// Standard alternating diagram of a family member.
pub fn family_pd(f: &FamilySpec, cap: usize) -> Result<PlanarDiagram> {
    f.validate()?;
    let cr = f.crossing_number();
    if cr > cap {
        return Err(Error::CapExceeded { crossings: cr, cap });
    }
    let d = match *f {
        FamilySpec::Torus2 { n } => braid_closure(2, &vec![1; 2 * n])?,
        FamilySpec::Twist { n } => pretzel_columns(&[n - 2, 1, 1])?,
        FamilySpec::Pretzel { k, m, n } => pretzel_columns(&[2 * k + 1, 2 * m + 1, 2 * n + 1])?,
    };
    if !d.is_alternating() || d.num_crossings() != cr {
        return Err(Error::Internal(format!("{f} diagram is not a reduced alternating diagram")));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homfly::{homfly, LaurentPoly2};

    #[test]
    fn braid_index_formulas() {
        assert_eq!(family_braid_index(&FamilySpec::Torus2 { n: 2 }).unwrap(), 3);
        assert_eq!(family_braid_index(&FamilySpec::Twist { n: 5 }).unwrap(), 3);
        assert_eq!(family_braid_index(&FamilySpec::Twist { n: 4 }).unwrap(), 3);
        assert_eq!(family_braid_index(&FamilySpec::Pretzel { k: 0, m: 0, n: 0 }).unwrap(), 2);
        assert!(family_braid_index(&FamilySpec::Twist { n: 2 }).is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["torus2(3)", "twist(7)", "pretzel(1,0,2)"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("torus2(0)".parse::<FamilySpec>().is_err());
        assert!("knot(3)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn small_members_are_the_expected_knots() {
        let hopf = family_pd(&FamilySpec::Torus2 { n: 1 }, 24).unwrap();
        assert_eq!((hopf.num_crossings(), hopf.num_components()), (2, 2));
        let trefoil = homfly(&braid_closure(2, &[1, 1, 1]).unwrap()).unwrap();
        let p000 = homfly(&family_pd(&FamilySpec::Pretzel { k: 0, m: 0, n: 0 }, 24).unwrap()).unwrap();
        assert!(p000 == trefoil || p000 == homfly(&braid_closure(2, &[-1, -1, -1]).unwrap()).unwrap());
        // figure-eight: amphichiral, a^{±2} − 1 − z²
        let fig8 = homfly(&family_pd(&FamilySpec::Twist { n: 4 }, 24).unwrap()).unwrap();
        assert_eq!(fig8, LaurentPoly2::parse("1 a^-2 + -1 + 1 a^2 + -1 z^2").unwrap());
        assert_eq!(homfly(&family_pd(&FamilySpec::Twist { n: 3 }, 24).unwrap()).unwrap(), p000);
        // 5_2 and 6_1 from their standard braid words, either chirality
        for (n, strands, word) in [(5, 3, vec![1, 1, 1, 2, -1, 2]), (6, 4, vec![1, 1, 2, -1, -3, 2, -3])] {
            let b = braid_closure(strands, &word).unwrap();
            let t = homfly(&family_pd(&FamilySpec::Twist { n }, 24).unwrap()).unwrap();
            assert!(t == homfly(&b).unwrap() || t == homfly(&b.mirror()).unwrap(), "twist({n})");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            family_pd(&FamilySpec::Torus2 { n: 13 }, 24),
            Err(Error::CapExceeded { crossings: 26, cap: 24 })
        );
    }
}
