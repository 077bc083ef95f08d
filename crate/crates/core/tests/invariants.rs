use proptest::prelude::*;

use flatcurve::graph::scrambled_grid;
use flatcurve::moves::face_census;
use flatcurve::{
    apply_electrical, apply_move, casson_c2, defect_of_code, defect_polyak, defect_report, defect_winding,
    enumerate_electrical, enumerate_moves, gauss_code, medial_site, predict_delta, random_curve, CurveMap,
    ElectricalKind, KnotDiagram, MoveKind,
};

fn curve() -> impl Strategy<Value = CurveMap> {
    (0usize..30, any::<u64>()).prop_map(|(n, seed)| random_curve(n, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn defect_is_even_and_formulas_agree(c in curve()) {
        let d = defect_polyak(&c).unwrap();
        prop_assert_eq!(d % 2, 0);
        prop_assert_eq!(defect_winding(&c).unwrap(), d);
        prop_assert!(defect_report(&c).unwrap().holds());
    }

    #[test]
    fn defect_ignores_basepoint_orientation_reflection(c in curve(), pick in any::<prop::sample::Index>()) {
        let d = defect_polyak(&c).unwrap();
        let trav = c.traversal();
        if !trav.is_empty() {
            let b = trav[pick.index(trav.len())];
            prop_assert_eq!(defect_polyak(&c.with_basepoint(b)).unwrap(), d);
            prop_assert_eq!(defect_polyak(&c.with_basepoint(c.alpha(b))).unwrap(), d);
        }
        prop_assert_eq!(defect_polyak(&c.reversed()).unwrap(), d);
        prop_assert_eq!(defect_polyak(&c.mirror()).unwrap(), d);
        prop_assert_eq!(defect_of_code(&gauss_code(&c).unwrap().negated()), d);
    }

    #[test]
    fn decreasing_moves_match_predictions(c in curve()) {
        let before = defect_polyak(&c).unwrap();
        for site in enumerate_moves(&c, &MoveKind::HOMOTOPY_DECREASING) {
            let after = apply_move(&c, &site).unwrap();
            after.validate().unwrap();
            prop_assert!(after.is_unicursal());
            prop_assert_eq!(after.vertex_count() as i64, c.vertex_count() as i64 + site.kind().vertex_delta());
            let delta = defect_polyak(&after).unwrap() - before;
            prop_assert_eq!(predict_delta(&c, &site).unwrap(), delta);
            prop_assert!([-2, 0, 2].contains(&delta));
        }
    }

    #[test]
    fn moves_keep_structure(c in curve()) {
        for site in enumerate_moves(&c, &MoveKind::ALL) {
            let after = apply_move(&c, &site).unwrap();
            after.validate().unwrap();
            prop_assert_eq!(after.vertex_count() as i64, c.vertex_count() as i64 + site.kind().vertex_delta());
            if !after.is_circle() {
                prop_assert_eq!(after.faces().count(), after.vertex_count() + 2);
            }
            if MoveKind::HOMOTOPY.contains(&site.kind()) {
                prop_assert!(after.is_unicursal());
            }
        }
    }

    #[test]
    fn increasing_moves_have_inverses(c in curve(), pick in any::<prop::sample::Index>()) {
        let key = c.canonical_form(false);
        for (up, down) in [
            (MoveKind::ZeroOne, MoveKind::OneZero),
            (MoveKind::ZeroTwo, MoveKind::TwoZero),
            (MoveKind::ThreeThree, MoveKind::ThreeThree),
            (MoveKind::OneTwo, MoveKind::TwoOne),
        ] {
            let sites = enumerate_moves(&c, &[up]);
            if sites.is_empty() {
                continue;
            }
            let bigger = apply_move(&c, &sites[pick.index(sites.len())]).unwrap();
            let back = enumerate_moves(&bigger, &[down])
                .into_iter()
                .any(|s| apply_move(&bigger, &s).unwrap().canonical_form(false) == key);
            prop_assert!(back, "{} has no inverse", up);
        }
    }

    #[test]
    fn face_census_sums_to_twice_edges(c in curve()) {
        let census = face_census(&c.faces());
        let darts: usize = census.iter().enumerate().map(|(deg, k)| deg * k).sum();
        prop_assert_eq!(darts, if c.is_circle() { 0 } else { 2 * c.edge_count() });
    }

    #[test]
    fn casson_ignores_basepoint(n in 1usize..10, seed in any::<u64>(), bits in any::<u16>(), pick in any::<prop::sample::Index>()) {
        let c = random_curve(n, seed);
        let asc: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        let k = KnotDiagram::new(c.clone(), asc).unwrap();
        let v = casson_c2(&k).unwrap();
        let trav = c.traversal();
        let b = trav[pick.index(trav.len())];
        prop_assert_eq!(casson_c2(&k.with_basepoint(b)).unwrap(), v);
        prop_assert_eq!(casson_c2(&k.with_basepoint(c.alpha(b))).unwrap(), v);
    }

    #[test]
    fn medial_commutes_on_scrambled_grids(p in 1usize..5, q in 2usize..5, edits in 0usize..8, seed in any::<u64>()) {
        let g = scrambled_grid(p, q, edits, seed);
        for g in [g.clone(), g.dual()] {
            let m = g.medial();
            for s in enumerate_electrical(&g) {
                let after = apply_electrical(&g, &s).unwrap();
                after.validate().unwrap();
                prop_assert_eq!(after.edge_count() as i64, g.edge_count() as i64 + s.kind.edge_delta());
                let via = apply_move(&m, &medial_site(&g, &s)).unwrap();
                prop_assert_eq!(after.medial().canonical_form(false), via.canonical_form(false));
            }
        }
    }

    #[test]
    fn duality_swaps_site_counts(p in 1usize..5, q in 1usize..5, edits in 0usize..6, seed in any::<u64>()) {
        let g = scrambled_grid(p, q, edits, seed);
        let d = g.dual();
        prop_assert_eq!(d.dual().canonical_form(false), g.canonical_form(false));
        prop_assert_eq!(d.medial().canonical_form(false), g.medial().canonical_form(false));
        for k in ElectricalKind::ALL {
            let count = |h: &flatcurve::PlaneGraph, k| enumerate_electrical(h).iter().filter(|s| s.kind == k).count();
            prop_assert_eq!(count(&g, k), count(&d, k.dual()));
        }
    }

    #[test]
    fn cmap_round_trip(c in curve()) {
        let back = CurveMap::parse_cmap(&c.to_cmap()).unwrap();
        prop_assert_eq!(back, c);
    }
}
