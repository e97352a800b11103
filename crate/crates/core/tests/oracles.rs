//! Checks against brute-force oracles that share no code path with the
//! library algorithms they test.

mod common;

use std::collections::BTreeSet;

use common::*;

use borel_core::enumerate::{count_strongly_stable, enumerate_strongly_stable, EnumFilter};
use borel_core::ideal::MonomialIdeal;
use borel_core::scan::tetrahedral;
use borel_core::tangent::{graded_dimension_oracle, TangentComputer};
use borel_core::{format_ideal, graded_dimension, parse_ideal, tangent_dimension, tangent_dimension_oracle};

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=3 {
        for l in 1..=10 {
            let oracle: BTreeSet<String> = all_order_ideals(n, l)
                .iter()
                .filter(|c| brute_force_strongly_stable(n, c))
                .map(|c| format_ideal(&to_standard_set(n, c).minimal_generators()))
                .collect();
            let got: Vec<String> = enumerate_strongly_stable(n, l, &EnumFilter::default())
                .unwrap()
                .iter()
                .map(format_ideal)
                .collect();
            let mut sorted = got.clone();
            sorted.sort();
            assert_eq!(got, sorted, "emission order N={n} l={l}");
            assert_eq!(
                got.iter().cloned().collect::<BTreeSet<_>>().len(),
                got.len(),
                "duplicates"
            );
            assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), oracle, "N={n} l={l}");
        }
    }
}

#[test]
fn strong_stability_matches_brute_force() {
    for n in 1..=3 {
        for l in 1..=8 {
            for cells in all_order_ideals(n, l) {
                let ideal = to_standard_set(n, &cells).minimal_generators();
                assert_eq!(
                    ideal.is_strongly_stable(),
                    brute_force_strongly_stable(n, &cells),
                    "{}",
                    format_ideal(&ideal)
                );
            }
        }
    }
}

#[test]
fn plane_counts_are_distinct_partitions() {
    assert_eq!(distinct_partitions(5), 3);
    for l in 1..=20 {
        assert_eq!(count_strongly_stable(2, l).unwrap(), distinct_partitions(l), "l={l}");
    }
}

#[test]
fn colength_two_for_small_n() {
    for n in 1..=4 {
        let oracle = all_order_ideals(n, 2)
            .into_iter()
            .filter(|c| brute_force_strongly_stable(n, c))
            .count();
        assert_eq!(oracle, 1);
        assert_eq!(count_strongly_stable(n, 2).unwrap(), 1);
    }
}

#[test]
fn staircase_round_trips() {
    for n in 1..=3 {
        for l in 0..=7 {
            let all = if l == 0 {
                vec![Cells::new()]
            } else {
                all_order_ideals(n, l)
            };
            for cells in all {
                let s = to_standard_set(n, &cells);
                let ideal = s.minimal_generators();
                assert_eq!(ideal.standard_set().unwrap(), s);
                let reparsed = parse_ideal(&format_ideal(&ideal), n).unwrap();
                assert!(reparsed.was_minimal());
                assert_eq!(reparsed.ideal, ideal);
            }
        }
    }
}

#[test]
fn maximal_ideal_power_colengths() {
    for n in 1..=4 {
        for k in 1..=5 {
            let m = MonomialIdeal::maximal_ideal_power(n, k);
            assert_eq!(m.colength().unwrap() as u64, tetrahedral(n, k), "N={n} k={k}");
        }
    }
}

#[test]
fn enumerated_ideals_are_sound() {
    for l in 1..=20 {
        for ideal in enumerate_strongly_stable(3, l, &EnumFilter::default()).unwrap() {
            assert!(ideal.is_strongly_stable());
            assert_eq!(ideal.colength().unwrap(), l);
            let m = ideal.pure_power_profile().unwrap().m;
            assert!(m.windows(2).all(|w| w[0] <= w[1]), "{m:?}");
        }
    }
}

#[test]
fn filters_equal_post_filtering() {
    let all = enumerate_strongly_stable(3, 14, &EnumFilter::default()).unwrap();
    for m1 in 1..=3 {
        for g in 3..=8 {
            let f = EnumFilter {
                m1: Some(m1),
                num_generators: Some(g),
                max_results: None,
            };
            let direct = enumerate_strongly_stable(3, 14, &f).unwrap();
            let post: Vec<_> = all.iter().filter(|i| f.accepts(i)).cloned().collect();
            assert_eq!(direct, post, "m1={m1} g={g}");
        }
    }
}

#[test]
fn smooth_plane_for_small_colength() {
    for l in 1..=8 {
        for cells in all_order_ideals(2, l) {
            let ideal = to_standard_set(2, &cells).minimal_generators();
            assert_eq!(tangent_dimension(&ideal).unwrap().total, 2 * l as u64);
        }
    }
}

#[test]
fn graded_route_matches_elimination_on_small_borel_ideals() {
    for l in 1..=7 {
        for ideal in enumerate_strongly_stable(3, l, &EnumFilter::default()).unwrap() {
            let r = tangent_dimension(&ideal).unwrap();
            assert_eq!(
                r.total,
                tangent_dimension_oracle(&ideal).unwrap(),
                "{}",
                format_ideal(&ideal)
            );
        }
    }
}

#[test]
fn graded_sum_identity_and_outside_shell() {
    for l in 1..=8 {
        for ideal in enumerate_strongly_stable(3, l, &EnumFilter::default()).unwrap() {
            let tc = TangentComputer::new(&ideal).unwrap();
            let report = tc.report();
            let bx = tc.support_box();
            let mut sum = 0;
            for alpha in bx.points() {
                let d = tc.graded_dimension(&alpha).unwrap();
                if d > 0 {
                    assert!(report.per_alpha.contains(&(alpha.clone(), d)));
                }
                sum += d;
            }
            assert_eq!(sum, report.total);
            assert_eq!(report.per_alpha.iter().map(|p| p.1).sum::<u64>(), report.total);
            assert_eq!(report.zero_rank, (report.g * report.l) as u64 - report.total);
            for (alpha, _) in &report.per_alpha {
                assert!(bx.contains(alpha));
            }
            // one layer outside the box in every direction
            for t in 0..3 {
                for side in [bx.lo[t] - 1, bx.hi[t] + 1] {
                    for mut alpha in bx.points().into_iter().step_by(3) {
                        alpha[t] = side;
                        assert_eq!(tc.graded_dimension(&alpha).unwrap(), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn graded_pieces_match_degree_blocks() {
    let ideal = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z", 3).unwrap().ideal;
    let tc = TangentComputer::new(&ideal).unwrap();
    for alpha in tc.support_box().points() {
        assert_eq!(
            tc.graded_dimension(&alpha).unwrap(),
            graded_dimension_oracle(&ideal, &alpha, 5000).unwrap(),
            "{alpha:?}"
        );
    }
}

#[test]
fn pinned_graded_piece() {
    let ideal = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z", 3).unwrap().ideal;
    assert_eq!(graded_dimension(&ideal, &[0, 2, -3]).unwrap(), 1);
    assert_eq!(graded_dimension_oracle(&ideal, &[0, 2, -3], 5000).unwrap(), 1);
}

#[test]
fn maximal_square_in_three_variables() {
    let m2 = MonomialIdeal::maximal_ideal_power(3, 2);
    assert_eq!(tangent_dimension_oracle(&m2).unwrap(), 18);
    let r = tangent_dimension(&m2).unwrap();
    assert_eq!((r.total, r.zero_rank), (18, 6 * 4 - 18));
}

#[test]
fn three_variable_lower_bound() {
    for l in 1..=16 {
        for ideal in enumerate_strongly_stable(3, l, &EnumFilter::default()).unwrap() {
            let t = tangent_dimension(&ideal).unwrap().total;
            let l = l as u64;
            assert!(t >= 3 * l);
            if ideal.pure_powers()[0] == Some(1) {
                assert_eq!(t, 3 * l, "{}", format_ideal(&ideal));
            }
        }
    }
}

#[test]
fn generator_order_does_not_matter() {
    let a = parse_ideal("z^4,y*z^2,x*z^2,y^2,x*y,x^2", 3).unwrap().ideal;
    let b = parse_ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4,x^3", 3).unwrap().ideal;
    assert_eq!(a, b);
    assert_eq!(tangent_dimension(&a).unwrap(), tangent_dimension(&b).unwrap());
}

#[test]
fn four_variables_small() {
    // exhaustive order ideals also give the count of Borel ones
    for l in 1..=5 {
        let oracle = all_order_ideals(4, l)
            .into_iter()
            .filter(|c| brute_force_strongly_stable(4, c))
            .count();
        assert_eq!(count_strongly_stable(4, l).unwrap(), oracle, "l={l}");
    }
    let i = parse_ideal("x,y,z,w^2", 4).unwrap().ideal;
    assert_eq!(cells_of(&i).len(), 2);
}
