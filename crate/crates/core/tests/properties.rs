//! Randomized invariant checks for the polyhedral kernel and the group
//! models, driven by a fixed-seed generator so failures are reproducible.

use monoids_core::cones::{hilbert_basis, Cone, LatticeBasis};
use monoids_core::linalg::{self, QVec};
use monoids_core::rat::{rat, Rat};
use monoids_core::rootsys::{DynkinType, GroupModel, GroupSpec, SimpleFactor};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + salt)
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> QVec {
    (0..dim).map(|_| Rat::from_integer(rng.gen_range(lo..=hi).into())).collect()
}

fn random_cone(rng: &mut ChaCha8Rng, dim: usize) -> Cone {
    let count = rng.gen_range(1..=dim + 3);
    let gens: Vec<QVec> = (0..count).map(|_| random_vector(rng, dim, -5, 5)).collect();
    Cone::from_generators(dim, &gens).unwrap()
}

/// A random point of the cone: a non-negative integer combination of its
/// generators.
fn random_member(rng: &mut ChaCha8Rng, c: &Cone) -> QVec {
    let mut p = linalg::zeros(c.ambient_dim());
    for g in c.generators() {
        let coeff = Rat::from_integer(rng.gen_range(0i64..=3).into());
        p = linalg::add_scaled(&p, &coeff, &g);
    }
    p
}

#[test]
fn dual_of_dual_is_the_identity() {
    let mut rng = rng(1);
    for _ in 0..120 {
        let dim = rng.gen_range(2..=4);
        let c = random_cone(&mut rng, dim);
        assert_eq!(c.dual().dual(), c, "{c:?}");
    }
}

#[test]
fn generator_and_facet_descriptions_agree() {
    let mut rng = rng(2);
    for _ in 0..80 {
        let dim = rng.gen_range(2..=4);
        let c = random_cone(&mut rng, dim);
        for _ in 0..5 {
            let p = random_member(&mut rng, &c);
            assert!(c.contains(&p), "member {p:?} of {c:?}");
        }
        // A random point outside some facet must be reported outside.
        let q = random_vector(&mut rng, dim, -6, 6);
        let inside_by_facets = c.dual().generators().iter().all(|f| {
            linalg::dot(f, &q) >= rat(0)
        });
        assert_eq!(c.contains(&q), inside_by_facets, "{q:?} in {c:?}");
    }
}

#[test]
fn intersection_is_the_largest_common_subcone() {
    let mut rng = rng(3);
    for _ in 0..60 {
        let dim = rng.gen_range(2..=4);
        let a = random_cone(&mut rng, dim);
        let b = random_cone(&mut rng, dim);
        let meet = a.intersect(&b).unwrap();
        assert!(meet.is_subset_of(&a));
        assert!(meet.is_subset_of(&b));
        for _ in 0..5 {
            let p = random_member(&mut rng, &a);
            if b.contains(&p) {
                assert!(meet.contains(&p), "{p:?} in both but not in the intersection");
            }
        }
    }
}

#[test]
fn minkowski_sum_contains_sums_of_members() {
    let mut rng = rng(4);
    for _ in 0..60 {
        let dim = rng.gen_range(2..=4);
        let a = random_cone(&mut rng, dim);
        let b = random_cone(&mut rng, dim);
        let sum = a.minkowski_sum(&b).unwrap();
        assert!(a.is_subset_of(&sum));
        assert!(b.is_subset_of(&sum));
        let p = linalg::add(&random_member(&mut rng, &a), &random_member(&mut rng, &b));
        assert!(sum.contains(&p));
    }
}

#[test]
fn faces_of_pointed_cones_are_nested_subcones() {
    let mut rng = rng(5);
    let mut checked = 0;
    while checked < 40 {
        let dim = rng.gen_range(2..=3);
        let c = random_cone(&mut rng, dim);
        if !c.is_strictly_convex() {
            continue;
        }
        checked += 1;
        let faces = c.faces().unwrap();
        assert!(faces.first().unwrap().dim() == 0, "the zero face comes first");
        assert_eq!(faces.last().unwrap(), &c, "the cone itself comes last");
        for (i, f) in faces.iter().enumerate() {
            assert!(f.is_subset_of(&c));
            for g in &faces[i + 1..] {
                assert_ne!(f, g, "duplicate faces");
            }
        }
    }
}

#[test]
fn hilbert_bases_generate_all_small_lattice_points() {
    let mut rng = rng(6);
    let lattice2 = LatticeBasis::standard(2);
    let mut checked = 0;
    while checked < 15 {
        let c = random_cone(&mut rng, 2);
        if !c.is_strictly_convex() {
            continue;
        }
        checked += 1;
        let hb = hilbert_basis(&c, &lattice2).unwrap();
        for h in &hb {
            assert!(c.contains(h));
            assert!(h.iter().all(|x| x.is_integer()));
        }
        // Every lattice point of the cone with small entries is a
        // non-negative integer combination of the basis.
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let p = linalg::vec_i64(&[x, y]);
                if c.contains(&p) {
                    assert!(
                        represented(&p, &hb, &c, &mut std::collections::HashMap::new()),
                        "({x},{y}) not generated in {c:?} by {hb:?}"
                    );
                }
            }
        }
    }
}

fn represented(
    p: &QVec,
    hb: &[QVec],
    c: &Cone,
    memo: &mut std::collections::HashMap<Vec<String>, bool>,
) -> bool {
    if p.iter().all(Zero::is_zero) {
        return true;
    }
    let key: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    memo.insert(key.clone(), false);
    let ok = hb.iter().any(|h| {
        let rest = linalg::sub(p, h);
        c.contains(&rest) && represented(&rest, hb, c, memo)
    });
    memo.insert(key, ok);
    ok
}

#[test]
fn weyl_averages_are_invariant_under_every_reflection() {
    let mut rng = rng(7);
    for (letter, rank) in [(DynkinType::A, 2), (DynkinType::B, 2), (DynkinType::G, 2)] {
        let spec = GroupSpec {
            factors: vec![SimpleFactor { letter, rank }],
            central_rank: 1,
            lattice: None,
        };
        let m = GroupModel::build(&spec).unwrap();
        for _ in 0..10 {
            let v = random_vector(&mut rng, m.ambient_dim(), -4, 4);
            let avg = m.w_average(&v, 1_000_000).unwrap();
            for s in m.reflection_matrices() {
                assert_eq!(linalg::mat_vec(&s, &avg), avg, "average moved by a reflection");
            }
            for i in 0..m.semisimple_rank() {
                assert!(avg[i].is_zero(), "semisimple block of the average must vanish");
            }
        }
    }
}

#[test]
fn valuation_cones_are_cut_out_by_the_simple_roots()
{
    let mut rng = rng(8);
    for factors in [
        vec![SimpleFactor { letter: DynkinType::A, rank: 2 }],
        vec![
            SimpleFactor { letter: DynkinType::A, rank: 1 },
            SimpleFactor { letter: DynkinType::C, rank: 3 },
        ],
    ] {
        let spec = GroupSpec { factors, central_rank: 1, lattice: None };
        let m = GroupModel::build(&spec).unwrap();
        let v_cone = m.valuation_cone();
        for _ in 0..20 {
            let p = random_member(&mut rng, v_cone);
            // Pairing with each simple root (a row of the Cartan matrix)
            // must be non-positive.
            for j in 0..m.semisimple_rank() {
                let pairing: Rat = (0..m.semisimple_rank())
                    .map(|i| &p[i] * &Rat::from_integer(m.cartan()[j][i].into()))
                    .sum();
                assert!(pairing <= rat(0));
            }
        }
    }
}
