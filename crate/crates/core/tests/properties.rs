use proptest::prelude::*;

use gprc_core::genperm::{CylinderDiagram, Diagonal, GeneralizedPermutation, Symbol};
use gprc_core::rauzy::{self, enumerate, extended_class_through_reducibles, op_a, op_b, op_c, ClassKind, Undefined, Word};
use gprc_core::spin::{omega_matrix, reduce, reduce_with, spin_parity};
use gprc_core::surface::{stratum_of, stratum_of_diagram, suspension_data};

/// Random generalized permutations: each symbol twice, shuffled, cut anywhere.
fn any_perm(max: usize) -> impl Strategy<Value = GeneralizedPermutation> {
    (2..=max)
        .prop_flat_map(|n| {
            let letters: Vec<Symbol> = (0..n as Symbol).flat_map(|s| [s, s]).collect();
            (Just(letters).prop_shuffle(), 1..2 * n)
        })
        .prop_map(|(w, k)| GeneralizedPermutation::new(w[..k].to_vec(), w[k..].to_vec()).unwrap())
}

/// Random single-cylinder diagrams admitting positive lengths.
fn any_diagram(max: usize) -> impl Strategy<Value = CylinderDiagram> {
    any_perm(max)
        .prop_map(|p| CylinderDiagram::new(p.top().to_vec(), p.bottom().to_vec()).unwrap())
        .prop_filter("length feasible", |cd| cd.is_length_feasible())
}

/// Permutations in strata with even degrees, with their known parity.
const EVEN_SEEDS: [(&str, u8); 6] = [
    ("0 1 2 3 / 3 2 1 0", 1),
    ("0 1 2 3 4 5 / 5 4 3 2 1 0", 0),
    ("0 1 2 3 4 5 / 3 2 5 4 1 0", 1),
    ("0 1 2 3 4 5 6 7 / 5 4 3 2 7 6 1 0", 0),
    ("0 1 2 3 4 5 6 7 / 3 2 5 4 7 6 1 0", 1),
    ("0 1 2 3 4 5 6 / 6 5 4 3 2 1 0", 0),
];

fn irreducible(max: usize) -> impl Strategy<Value = GeneralizedPermutation> {
    any_perm(max).prop_filter("irreducible", rauzy::is_irreducible)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn c_and_inverse_are_involutions(p in any_perm(8)) {
        prop_assert_eq!(op_c(&op_c(&p)), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn moves_commute_with_inversion(p in any_perm(8)) {
        let inv = p.inverse();
        prop_assert_eq!(op_a(&inv).map(|q| q.inverse()).ok(), op_b(&p).ok());
        prop_assert_eq!(op_b(&inv).map(|q| q.inverse()).ok(), op_a(&p).ok());
        prop_assert_eq!(op_c(&inv), op_c(&p).inverse());
        prop_assert_eq!(
            op_a(&p) == Err(Undefined::SameRightmost),
            op_b(&p) == Err(Undefined::SameRightmost)
        );
    }

    #[test]
    fn words_agree_with_permutations(p in any_perm(10)) {
        let w = Word::from_perm(&p).unwrap();
        prop_assert_eq!(w.to_perm(), p.clone());
        prop_assert_eq!(w.text(), p.canonical().to_string());
        prop_assert_eq!(w.op_a().map(|v| v.to_perm()).ok(), op_a(&p).ok());
        prop_assert_eq!(w.op_b().map(|v| v.to_perm()).ok(), op_b(&p).ok());
        prop_assert_eq!(w.op_c().to_perm(), op_c(&p));
        prop_assert_eq!(w.inverse().to_perm(), p.inverse());
        prop_assert_eq!(w.is_irreducible(), rauzy::is_irreducible(&p));
    }

    /// The dual test used for irreducibility and the primal solve used for
    /// suspension data decide the same thing.
    #[test]
    fn primal_and_dual_agree(p in any_perm(8)) {
        prop_assert_eq!(rauzy::is_irreducible(&p), suspension_data(&p).is_some());
    }

    #[test]
    fn polygon_and_diagram_agree(
        (cd, diagonal, tb, bb) in any_diagram(7).prop_flat_map(|cd| {
            let (t, b) = (cd.top().len(), cd.bottom().len());
            (Just(cd), prop_oneof![Just(Diagonal::TopFirst), Just(Diagonal::BottomFirst)], 0..t, 0..b)
        })
    ) {
        let from_diagram = stratum_of_diagram(&cd).unwrap();
        let p = GeneralizedPermutation::from_cylinder_diagram(&cd, diagonal, tb, bb).unwrap();
        prop_assert!(rauzy::is_irreducible(&p));
        let from_polygon = stratum_of(&p).unwrap();
        prop_assert_eq!(&from_polygon.degrees, &from_diagram.degrees);
        prop_assert_eq!(from_polygon.genus, from_diagram.genus);
        prop_assert_eq!(from_polygon.holonomy, from_diagram.holonomy);
        let cut = GeneralizedPermutation::from_cylinder_diagram(&cd, Diagonal::TopFirst, 0, 0).unwrap();
        let at_cut = stratum_of(&cut).unwrap();
        prop_assert_eq!(at_cut.left_degree, from_diagram.left_degree);
        prop_assert_eq!(at_cut.right_degree, from_diagram.right_degree);
    }

    /// Spin parity is constant along random walks in a class, and the
    /// choice of partner in the reduction does not matter.
    #[test]
    fn spin_is_a_class_invariant(
        start in 0..EVEN_SEEDS.len(),
        moves in proptest::collection::vec(0u8..3, 0..60),
        seed in any::<u64>(),
    ) {
        let (text, parity) = EVEN_SEEDS[start];
        let mut w = Word::from_perm(&text.parse().unwrap()).unwrap();
        for m in moves {
            let next = match m {
                0 => w.op_a().ok(),
                1 => w.op_b().ok(),
                _ => Some(w.op_c()).filter(|v| v.is_irreducible()),
            };
            if let Some(v) = next {
                w = v;
            }
        }
        let p = w.to_perm();
        prop_assert_eq!(spin_parity(&p).unwrap(), parity);
        let form = omega_matrix(&p).unwrap();
        let least = reduce(&form);
        let mut state = seed;
        let random = reduce_with(&form, |c| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            c[(state >> 33) as usize % c.len()]
        });
        prop_assert_eq!(least, random);
        prop_assert_eq!(least.pairs, stratum_of(&p).unwrap().genus as usize);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn class_invariants(p in irreducible(6)) {
        let seed = Word::from_perm(&p).unwrap();
        let prof = stratum_of(&p).unwrap();
        let rauzy = enumerate(&seed, ClassKind::Rauzy);
        prop_assert!(rauzy.iter().any(|w| w.top().len() == w.bottom().len()), "no balanced member");
        for w in &rauzy {
            prop_assert!(w.is_irreducible());
            let q = stratum_of(&w.to_perm()).unwrap();
            prop_assert_eq!(&q.degrees, &prof.degrees);
            prop_assert_eq!(q.left_degree, prof.left_degree);
        }
        let extended = enumerate(&seed, ClassKind::Extended);
        prop_assert!(rauzy.is_subset(&extended));
        // The extended class is a union of whole Rauzy classes.
        for w in extended.iter().take(20) {
            let inner = enumerate(w, ClassKind::Rauzy);
            prop_assert!(inner.is_subset(&extended));
            prop_assert!(inner == rauzy || inner.is_disjoint(&rauzy));
        }
        for w in &extended {
            let q = stratum_of(&w.to_perm()).unwrap();
            prop_assert_eq!(&q.degrees, &prof.degrees);
            prop_assert_eq!(q.genus, prof.genus);
        }
    }

    #[test]
    fn extended_definitions_coincide(p in irreducible(5)) {
        let seed = Word::from_perm(&p).unwrap();
        prop_assert_eq!(enumerate(&seed, ClassKind::Extended), extended_class_through_reducibles(&seed));
    }
}
