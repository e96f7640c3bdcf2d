use proptest::prelude::*;

use ropebound_core::bounds::{certify, CertifyConfig};
use ropebound_core::cord::CordDiagram;
use ropebound_core::diagram::PlanarDiagram;
use ropebound_core::homfly::{homfly, LaurentPoly2};
use ropebound_core::lattice::{parse_lattice_link, LatticeComponent, LatticeLink, LatticePoint};
use ropebound_core::random::{random_braid_diagram, random_cord_diagram, rng};
use ropebound_core::seifert::{is_coherent, make_coherent, straight_realization};

/// Mirror image: substitute a -> -a^-1.
fn mirror_oracle(p: &LaurentPoly2) -> LaurentPoly2 {
    let mut out = LaurentPoly2::zero();
    for (&(z, a), c) in p.terms() {
        let sign = if a.rem_euclid(2) == 0 { 1 } else { -1 };
        let c: i64 = c.try_into().unwrap();
        out = out.add(&LaurentPoly2::monomial(sign * c, z, -a));
    }
    out
}

fn fixture(name: &str) -> LatticeLink {
    let path = format!("{}/fixtures/{name}.lat", env!("CARGO_MANIFEST_DIR"));
    parse_lattice_link(&std::fs::read_to_string(path).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mirror_and_reversal(seed in any::<u64>()) {
        let d = random_braid_diagram(&mut rng(seed), 4, 7).unwrap();
        let h = homfly(&d).unwrap();
        prop_assert_eq!(homfly(&d.mirror()).unwrap(), mirror_oracle(&h));
        prop_assert_eq!(homfly(&d.reversed_all()).unwrap(), h.clone());
        let again = PlanarDiagram::from_pd(&d.to_pd()).unwrap();
        prop_assert_eq!(homfly(&again).unwrap(), h.clone());
        prop_assert_eq!(LaurentPoly2::parse(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn cord_text_round_trip(seed in any::<u64>(), n in 0usize..9) {
        let cd = random_cord_diagram(&mut rng(seed), n);
        let back = CordDiagram::parse(&cd.to_text()).unwrap();
        prop_assert_eq!(back.to_text(), cd.to_text());
        prop_assert_eq!(back.len(), n);
    }

    #[test]
    fn coherent_output_keeps_endpoints(seed in any::<u64>(), n in 1usize..7) {
        let cd = random_cord_diagram(&mut rng(seed), n);
        let r = make_coherent(&cd).unwrap();
        prop_assert_eq!(r.realization.ends.clone(), cd.endpoint_positions());
        prop_assert!(r.closed < n);
    }

    #[test]
    fn rigid_motions_keep_the_certificate(dx in -5i64..5, dy in -5i64..5, dz in -5i64..5, flip in any::<bool>()) {
        let link = fixture("trefoil24");
        let moved = LatticeLink::new(
            link.components
                .iter()
                .map(|c| {
                    let mut vs: Vec<LatticePoint> = c
                        .vertices
                        .iter()
                        .map(|p| LatticePoint { x: p.x + dx, y: p.y + dy, z: p.z + dz })
                        .collect();
                    if flip {
                        vs.reverse();
                    }
                    LatticeComponent::new(vs)
                })
                .collect(),
        );
        let a = certify(&link, &CertifyConfig::default()).unwrap();
        let b = certify(&moved, &CertifyConfig::default()).unwrap();
        prop_assert_eq!(a.b0(), b.b0());
        prop_assert_eq!(a.homfly.rewritten, b.homfly.rewritten);
    }
}

#[test]
fn straight_chords_are_often_not_coherent() {
    let mut r = rng(7);
    let mut rejected = 0;
    for _ in 0..100 {
        let cd = random_cord_diagram(&mut r, 4);
        if !is_coherent(&straight_realization(&cd).unwrap()).unwrap() {
            rejected += 1;
        }
    }
    assert!(rejected > 0);
}

#[test]
fn lattice_text_round_trip() {
    for name in ["trefoil24", "figure8_30", "knot51_34"] {
        let l = fixture(name);
        assert_eq!(parse_lattice_link(&l.to_text()).unwrap(), l);
    }
}
