//! Cross-checks for the disk-count oracle and bound soundness at small scale.

use polyzero_core::bounds;
use polyzero_core::families::{self, FamilySpec};
use polyzero_core::hypothesis::full_report;
use polyzero_core::oracle::{aberth_roots, count_in_disk, count_with_roots, winding_count, CountMethod};
use polyzero_core::{Complex, Polynomial, TheoremId};
use proptest::prelude::*;

fn random_poly(min_degree: usize, max_degree: usize) -> impl Strategy<Value = Polynomial> {
    (min_degree..=max_degree)
        .prop_flat_map(|n| prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n + 1))
        .prop_filter_map("leading coefficient is zero", |c| Polynomial::from_pairs(&c).ok())
}

fn min_pairwise_distance(roots: &[Complex]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn root_and_winding_counts_agree(p in random_poly(2, 30), radius in 0.2f64..1.8) {
        let roots = aberth_roots(&p).unwrap();
        prop_assume!(roots.converged);
        prop_assume!(min_pairwise_distance(&roots.roots) > 1e-3);
        prop_assume!(roots.boundary_margin(radius) > 1e-6);
        let c = count_with_roots(&p, &roots, radius).unwrap();
        prop_assert_eq!(c.method, CountMethod::CrossChecked);
    }

    #[test]
    fn cauchy_disk_holds_every_zero(p in random_poly(1, 30)) {
        let an = p.leading();
        let max_ratio = p.coeffs().iter().map(|a| (a / an).norm()).fold(0.0, f64::max);
        let c = count_in_disk(&p, 2.0 + max_ratio).unwrap();
        prop_assert_eq!(c.count, p.degree());
    }

    #[test]
    fn converged_residuals_are_small(p in random_poly(1, 50)) {
        let roots = aberth_roots(&p).unwrap();
        prop_assert!(roots.converged);
        // Σ |a_j| inside the unit disk; outside it the coefficients are
        // weighted by |z|^j, the size of the terms Horner actually sums.
        let scale: f64 = p.coeffs().iter().map(|a| a.norm()).sum();
        for z in &roots.roots {
            let weighted = p.abs_eval(z.norm().max(1.0));
            let bound = if z.norm() <= 1.0 { scale } else { weighted };
            prop_assert!(p.eval(*z).norm() <= 1e-8 * bound, "{} at {}", p.eval(*z).norm(), z);
        }
    }
}

#[test]
fn enestrom_kakeya_zeros_lie_in_unit_disk() {
    for degree in [1, 2, 5, 12, 30] {
        for p in families::sample(&FamilySpec::new(TheoremId::EkA, degree, 31, 100)).unwrap() {
            let roots = aberth_roots(&p).unwrap();
            assert!(roots.converged);
            assert!(roots.max_modulus() <= 1.0 + 1e-8, "{}", roots.max_modulus());
        }
    }
}

#[test]
fn every_applicable_bound_dominates_the_exact_count() {
    let deltas = [0.1, 0.3, 0.5, 0.7, 0.9];
    for theorem in [TheoremId::ThmB, TheoremId::ThmE, TheoremId::ThmF, TheoremId::Thm2] {
        for degree in [2, 6, 15] {
            for p in families::sample(&FamilySpec::new(theorem, degree, 99, 40)).unwrap() {
                let roots = aberth_roots(&p).unwrap();
                for &delta in &deltas {
                    if roots.boundary_margin(delta) < 1e-6 {
                        continue;
                    }
                    let exact = count_with_roots(&p, &roots, delta).unwrap().count;
                    for r in bounds::all_bounds(&p, delta).unwrap() {
                        assert!(exact <= r.integer_bound, "{:?} exact {exact} for {p:?}", r);
                    }
                }
            }
        }
    }
}

#[test]
fn boundary_inequality_on_unit_circle() {
    for p in families::sample(&FamilySpec::new(TheoremId::Thm2, 10, 4, 100)).unwrap() {
        let g = p.g_transform();
        let max_g = (0..1024)
            .map(|k| g.eval(Complex::from_polar(1.0, std::f64::consts::TAU * k as f64 / 1024.0)).norm())
            .fold(0.0, f64::max);
        for w in full_report(&p).witnesses_for(TheoremId::Thm2) {
            let m = bounds::m2(&p, w.lambda.unwrap(), w.t.unwrap(), w.s.unwrap());
            assert!(max_g <= m * (1.0 + 1e-9), "{max_g} > {m}");
        }
    }
}

#[test]
fn winding_is_multiplicity_aware() {
    // (z - 0.2)^2 (z + 0.9) = 0.036 - 0.32 z + 0.5 z^2 + z^3
    let p = Polynomial::from_real(&[0.036, -0.32, 0.5, 1.0]).unwrap();
    assert_eq!(winding_count(&p, 0.5), Ok(2));
    assert_eq!(count_in_disk(&p, 0.5).unwrap().count, 2);
}
