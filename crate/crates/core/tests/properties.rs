use cyquiv::catalog::{divisor_to_shift_matrix, get_framed_example, get_monad_template, get_quiver_with_potential, FramedExampleId, GeometryId, MonadId, ShiftMatrix};
use cyquiv::characters::{character, generator_weights, pyramid_from_shift, Parity, WeightMultiset};
use cyquiv::framing::{framed_relations, numeric_solution_builder, FramedQuiverWithPotential, FramingStructure};
use cyquiv::linalg::QMatrix;
use cyquiv::monad::{assemble, evaluate};
use cyquiv::ncalg::{block_dims, chi_form, cyclic_derivative, ideal_membership, numeric_relation_residual, relations_from_potential, DimVector, NCPoly, Path, Potential, Quiver, Rep};
use cyquiv::partitions::{nested_series, plane_partition_series, PitConstraint};
use cyquiv::qseries::{compare, Comparison, QSeries, Ring, Substitution};
use cyquiv::{BigInt, Q};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn all_quivers() -> Vec<Quiver> {
    let mut out: Vec<Quiver> = [GeometryId::C3, GeometryId::Conifold, GeometryId::Y20, GeometryId::Ym0(3), GeometryId::Ym0(4)]
        .into_iter()
        .map(|g| get_quiver_with_potential(g).unwrap().0)
        .collect();
    for f in [FramedExampleId::ADHM3d, FramedExampleId::KN, FramedExampleId::NY3d, FramedExampleId::BeilinsonQ, FramedExampleId::Chainsaw2, FramedExampleId::Spiked(1, 1, 1)] {
        out.push(get_framed_example(f).unwrap().quiver);
    }
    out
}

fn conifold() -> Quiver {
    get_quiver_with_potential(GeometryId::Conifold).unwrap().0
}

/// Closed conifold word of length 2k from a choice of arrow per step.
fn conifold_word(choices: &[bool]) -> Vec<usize> {
    let qv = conifold();
    let (ac, bd) = (["A", "C"], ["B", "D"]);
    choices
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let name = if i % 2 == 0 { ac[c as usize] } else { bd[c as usize] };
            qv.arrow(name).unwrap()
        })
        .collect()
}

fn potential_from(qv: &Quiver, words: &[(Vec<usize>, i64)]) -> Potential {
    let mut w = Potential::zero();
    for (word, c) in words {
        w.add_word(qv, word, q(*c)).unwrap();
    }
    w
}

fn word_strategy() -> impl Strategy<Value = (Vec<usize>, i64)> {
    (prop::collection::vec(any::<bool>(), 1..=3), -3i64..=3).prop_map(|(c, k)| {
        let mut c2 = c.clone();
        c2.extend(c.iter().rev());
        (conifold_word(&c2), k)
    })
}

fn series_strategy(vars: usize, order: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((prop::collection::vec(0i64..=3, vars), -4i64..=4), 0..8).prop_map(move |terms| {
        let ring = Ring::colored(vars);
        let mut s = QSeries::zero(&ring, order);
        for (e, c) in terms {
            if ring.degree(&e) <= order {
                s.add_term(e, BigInt::from(c)).unwrap();
            }
        }
        s
    })
}

fn unit_series(vars: usize, order: i64) -> impl Strategy<Value = QSeries> {
    (series_strategy(vars, order), prop::bool::ANY).prop_map(move |(s, neg)| {
        let mut s = s;
        let c0 = s.coeff(&vec![0; vars]);
        let want = if neg { -1 } else { 1 };
        s.add_term(vec![0; vars], BigInt::from(want) - c0).unwrap();
        s
    })
}

fn same(a: &QSeries, b: &QSeries, order: i64) -> bool {
    compare(a, b, order).unwrap() == Comparison::Equal
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn derivative_is_linear(w1 in prop::collection::vec(word_strategy(), 1..4), w2 in prop::collection::vec(word_strategy(), 1..4), a in -3i64..=3, b in -3i64..=3) {
        let qv = conifold();
        let (p1, p2) = (potential_from(&qv, &w1), potential_from(&qv, &w2));
        let combo = p1.scale(&q(a)).add(&p2.scale(&q(b)));
        for name in ["A", "B", "C", "D"] {
            let lhs = cyclic_derivative(&qv, &combo, name).unwrap();
            let rhs = cyclic_derivative(&qv, &p1, name).unwrap().scale(&q(a)).add(&cyclic_derivative(&qv, &p2, name).unwrap().scale(&q(b)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rotation_leaves_derivatives_unchanged((word, c) in word_strategy(), k in 0usize..6) {
        let qv = conifold();
        let mut rot = word.clone();
        rot.rotate_left(k % word.len());
        let (w, r) = (potential_from(&qv, &[(word, c)]), potential_from(&qv, &[(rot, c)]));
        prop_assert_eq!(&w, &r);
        for name in ["A", "B", "C", "D"] {
            prop_assert_eq!(cyclic_derivative(&qv, &w, name).unwrap(), cyclic_derivative(&qv, &r, name).unwrap());
        }
    }

    #[test]
    fn chi_identity_via_block_dims(which in 0usize..11, a in prop::collection::vec(0u64..=5, 8), b in prop::collection::vec(0u64..=5, 8)) {
        let qv = &all_quivers()[which];
        let n = qv.vertices().len();
        let (a, b) = (DimVector(a[..n].to_vec()), DimVector(b[..n].to_vec()));
        let d = block_dims(qv, &a, &b);
        let rhs = d.g_ab as i64 - (d.g_a + d.g_b) as i64 - d.x_ab as i64 + (d.x_a + d.x_b) as i64;
        prop_assert_eq!(chi_form(qv, &a, &b), rhs);
        let dd = block_dims(qv, &a, &DimVector::zero(qv));
        prop_assert_eq!(chi_form(qv, &a, &a), dd.g_a as i64 - dd.x_a as i64);
    }

    #[test]
    fn membership_certificate_round_trips(picks in prop::collection::vec((0usize..4, 0usize..5, 0usize..5, -3i64..=3), 1..5)) {
        let (qv, w) = get_quiver_with_potential(GeometryId::Conifold).unwrap();
        let rels = relations_from_potential(&qv, &w);
        let paths = Path::enumerate(&qv, 1);
        let mut p = NCPoly::zero();
        for (r, u, v, c) in picks {
            let (u, v) = (&paths[u % paths.len()], &paths[v % paths.len()]);
            let term = NCPoly::from_path(u.clone()).mul(&rels.relations[r].poly).mul(&NCPoly::from_path(v.clone()));
            p.add_scaled(&term, &q(c));
        }
        // mixed endpoints are rejected before membership is attempted
        if p.endpoints().is_some() {
            let cert = ideal_membership(&qv, &p, &rels, 1).unwrap();
            prop_assert_eq!(cert.expand(&rels), p);
        }
    }

    #[test]
    fn numeric_solutions_satisfy_framed_relations(pts in prop::collection::btree_set((-20i64..20, -20i64..20), 1..4), perv in any::<bool>()) {
        let pts: Vec<(Q, Q)> = pts.into_iter().map(|(x, y)| (q(x), q(y))).collect();
        let id = if perv { FramedExampleId::PervSystem(GeometryId::C3, 1) } else { FramedExampleId::ADHM3d };
        let f = get_framed_example(id).unwrap();
        let frs = framed_relations(&f.specialize(&f.default_framing()).unwrap()).unwrap();
        let sol = numeric_solution_builder(id, &pts).unwrap();
        prop_assert!(sol.cyclic);
        for (name, v) in numeric_relation_residual(&frs.quiver, &frs.relations, &sol.rep).unwrap() {
            prop_assert!(v == q(0), "{} residual {}", name, v);
        }
    }

    #[test]
    fn c3_fibres_sum_to_point_count(pts in prop::collection::btree_set((-9i64..9, -9i64..9), 1..5), probe in prop::collection::vec((-30i64..30, -30i64..30, 1i64..30), 5)) {
        let t = get_monad_template(MonadId::C3).unwrap();
        let c = assemble(&t, &BTreeMap::new()).unwrap();
        let rels = framed_relations(&FramedQuiverWithPotential::new(&t.id, t.quiver.clone(), t.potential.clone(), &[], &[])).unwrap();
        let n = pts.len();
        let mut mats = BTreeMap::new();
        mats.insert("B1".to_string(), QMatrix::diag(&pts.iter().map(|p| q(p.0)).collect::<Vec<_>>()));
        mats.insert("B2".to_string(), QMatrix::diag(&pts.iter().map(|p| q(p.1)).collect::<Vec<_>>()));
        mats.insert("B3".to_string(), QMatrix::zeros(n, n));
        let rep = Rep::new(&t.quiver, vec![n], &mats).unwrap();
        let mut last = 0;
        for p in &pts {
            let r = evaluate(&c, &rels, &rep, &[q(p.0), q(p.1), q(0)]).unwrap();
            prop_assert!(r.d_squared_zero);
            last += r.fibre_homology[3];
        }
        prop_assert_eq!(last, n);
        // z ≠ 0 is off the support
        for (x, y, z) in probe {
            let r = evaluate(&c, &rels, &rep, &[q(x), q(y), q(z)]).unwrap();
            prop_assert!(r.d_squared_zero && r.fibre_exact);
        }
    }

    #[test]
    fn ring_axioms(a in series_strategy(2, 5), b in series_strategy(2, 5), c in series_strategy(2, 5)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(same(&ab_c, &a_bc, 5));
        let dist = a.mul(&b.add(&c).unwrap()).unwrap();
        let sum = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(same(&dist, &sum, 5));
        prop_assert!(same(&a.mul(&b).unwrap(), &b.mul(&a).unwrap(), 5));
    }

    #[test]
    fn pow_and_inverse(a in unit_series(2, 6), k in 1i64..4) {
        let one = QSeries::one(a.ring(), 6);
        prop_assert!(same(&a.mul(&a.inverse().unwrap()).unwrap(), &one, 6));
        prop_assert!(same(&a.pow(k).unwrap().mul(&a.pow(-k).unwrap()).unwrap(), &one, 6));
    }

    #[test]
    fn substitution_is_multiplicative(a in series_strategy(2, 5), b in series_strategy(2, 5)) {
        let sub = Substitution { target: Ring::colored(2), images: vec![(-1, vec![1, 1]), (1, vec![0, 1])] };
        let lhs = a.mul(&b).unwrap().substitute(&sub).unwrap();
        let rhs = a.substitute(&sub).unwrap().mul(&b.substitute(&sub).unwrap()).unwrap();
        prop_assert!(same(&lhs, &rhs, 5));
    }

    #[test]
    fn series_json_round_trips(a in series_strategy(3, 4)) {
        let j = serde_json::to_string(&a.to_json()).unwrap();
        let back = QSeries::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        prop_assert_eq!(a, back);
    }

    #[test]
    fn wide_pit_is_unconstrained(order in 1i64..8, extra in 0u32..3) {
        let o = order as u32;
        let pit = PitConstraint::new(o + 1 + extra, o + 1).unwrap();
        prop_assert_eq!(plane_partition_series(order, None, Some(pit)).unwrap(), plane_partition_series(order, None, None).unwrap());
    }

    #[test]
    fn colored_collapses_to_uncolored(m in 1usize..4, order in 1i64..7) {
        let sub = Substitution { target: Ring::q(), images: vec![(1, vec![1]); m] };
        let col = plane_partition_series(order, Some(m as u32), None).unwrap().substitute(&sub).unwrap();
        prop_assert!(same(&col, &plane_partition_series(order, None, None).unwrap(), order));
    }

    #[test]
    fn nested_grows_with_rank(r in 1u32..4) {
        let (a, b) = (nested_series(r, 8).univariate(), nested_series(r + 1, 8).univariate());
        prop_assert!(a.iter().zip(&b).all(|(x, y)| x <= y));
    }

    #[test]
    fn divisor_shift_telescopes(mut mu in prop::collection::vec(0i64..20, 1..6)) {
        mu.sort_unstable_by(|a, b| b.cmp(a));
        let s = divisor_to_shift_matrix(mu.len(), 0, &mu, &[]).unwrap();
        prop_assert_eq!(s.sub.iter().sum::<u64>() as i64, mu[0] - mu[mu.len() - 1]);
    }

    #[test]
    fn pyramid_reflection_and_generator_count(m in 1usize..4, n in 0usize..3, sub in prop::collection::vec(0u64..3, 5), t in 1u32..5) {
        let size = m + n;
        let s = ShiftMatrix::new(m, n, sub[..size - 1].to_vec()).unwrap();
        let p = pyramid_from_shift(&s, t).unwrap();
        let w = generator_weights(&p).unwrap();
        prop_assert_eq!(&w, &generator_weights(&p.reflect()).unwrap());
        let lens: Vec<i64> = p.rows.iter().map(|r| r.len as i64).collect();
        let want: i64 = lens.iter().flat_map(|a| lens.iter().map(move |b| *a.min(b))).sum();
        prop_assert_eq!(w.count() as i64, want);
    }

    #[test]
    fn character_of_union_is_product(a in prop::collection::vec((1u32..5, any::<bool>(), 1u32..3), 0..4), b in prop::collection::vec((1u32..5, any::<bool>(), 1u32..3), 0..4)) {
        let build = |v: &[(u32, bool, u32)]| {
            let mut w = WeightMultiset::default();
            for &(x, odd, k) in v {
                w.add(x, if odd { Parity::Odd } else { Parity::Even }, k);
            }
            w
        };
        let (wa, wb) = (build(&a), build(&b));
        prop_assert_eq!(character(&wa.union(&wb), 10), character(&wa, 10).mul(&character(&wb, 10)).unwrap());
    }

    #[test]
    fn framing_json_round_trips(r in 1usize..4) {
        let f = get_framed_example(FramedExampleId::ADHM3d).unwrap();
        let mut fs = f.default_framing();
        fs.ranks.insert("inf".into(), r);
        fs.matrices.insert("A_f".into(), QMatrix::zeros(r, r));
        let back = FramingStructure::from_json(&fs.to_json()).unwrap();
        prop_assert_eq!(back, fs);
    }
}

#[test]
fn framed_potentials_restrict_to_base() {
    for id in [FramedExampleId::PervSystem(GeometryId::C3, 1), FramedExampleId::PervSystem(GeometryId::Conifold, 1), FramedExampleId::PervSystem(GeometryId::Y20, 2)] {
        let f = get_framed_example(id).unwrap();
        let (base_q, base_w) = f.unframed();
        let FramedExampleId::PervSystem(g, _) = id else { unreachable!() };
        let (cq, cw) = get_quiver_with_potential(g).unwrap();
        assert_eq!(base_w.transport(&base_q, &cq).unwrap(), cw, "{id}");
        assert_eq!(relations_from_potential(&cq, &base_w.transport(&base_q, &cq).unwrap()), relations_from_potential(&cq, &cw));
    }
}

#[test]
fn every_framed_example_is_compatible() {
    for id in [
        FramedExampleId::ADHM3d,
        FramedExampleId::KN,
        FramedExampleId::NY3d,
        FramedExampleId::BeilinsonQ,
        FramedExampleId::PreChainsaw,
        FramedExampleId::Chainsaw2,
        FramedExampleId::Spiked(1, 2, 0),
        FramedExampleId::PervSystem(GeometryId::Y20, 1),
    ] {
        get_framed_example(id).unwrap().check_compatible().unwrap_or_else(|e| panic!("{id}: {e}"));
    }
}
