//! Property tests over randomly generated PMF pairs.

use proptest::prelude::*;

use visbench::benefit::{benefit_bounded, TransformCase};
use visbench::mcda::{
    stage_sums, sums_through_stage, weighted_rank, Criterion, CriteriaTable, Importance, Score,
    Stage, Weights,
};
use visbench::measures::{candidate_measures, d_ncm, d_new, js, kl, max_entropy, Pmf};

/// A PMF as raw weights, normalized on construction.
fn simplex(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, n).prop_filter_map("weights must not all vanish", |raw| {
        let sum: f64 = raw.iter().sum();
        if sum <= 0.0 {
            return None;
        }
        Some(raw.into_iter().map(|x| x / sum).collect())
    })
}

fn pmf_pair(max_n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2..=max_n).prop_flat_map(|n| (simplex(n), simplex(n)))
}

proptest! {
    #[test]
    fn bounded_measures_stay_in_unit_interval(
        (p, q) in pmf_pair(16),
        k in 0.1f64..6.0,
    ) {
        let p = Pmf::from_probs(p).unwrap();
        let q = Pmf::from_probs(q).unwrap();
        for d in [js(&p, &q).unwrap(), d_new(&p, &q, k).unwrap(), d_ncm(&p, &q, k).unwrap()] {
            prop_assert!(d.total >= 0.0 && d.total <= 1.0, "total {} out of [0,1]", d.total);
            let sum: f64 = d.per_letter.iter().sum();
            prop_assert!((sum - d.total).abs() < 1e-9, "decomposition sum {} vs total {}", sum, d.total);
            prop_assert!(d.per_letter.iter().all(|t| *t >= 0.0));
        }
        prop_assert!(kl(&p, &q).unwrap() >= 0.0);
    }

    #[test]
    fn symmetric_families_are_symmetric(
        (p, q) in pmf_pair(16),
        k in 0.1f64..6.0,
    ) {
        let p = Pmf::from_probs(p).unwrap();
        let q = Pmf::from_probs(q).unwrap();
        let js_diff = (js(&p, &q).unwrap().total - js(&q, &p).unwrap().total).abs();
        prop_assert!(js_diff < 1e-12);
        let new_diff = (d_new(&p, &q, k).unwrap().total - d_new(&q, &p, k).unwrap().total).abs();
        prop_assert!(new_diff < 1e-12);
    }

    #[test]
    fn bounded_benefit_stays_in_its_band(
        (input, recon) in pmf_pair(12),
        output in simplex(3),
    ) {
        // benefit lies in [ac - hmax, ac] for every bounded measure
        let input = Pmf::from_probs(input).unwrap();
        let recon = Pmf::from_probs(recon).unwrap();
        let output = Pmf::from_probs(output).unwrap();
        let ac = input.entropy() - output.entropy();
        let hmax = max_entropy(input.len()).unwrap();
        let case = TransformCase::new(input, output, recon).unwrap();
        for spec in candidate_measures() {
            let b = benefit_bounded(&case, &spec).unwrap();
            prop_assert!(b.benefit <= ac + 1e-12 && b.benefit >= ac - hmax - 1e-12);
            prop_assert!((b.benefit - (b.ac - b.pd)).abs() < 1e-12);
        }
    }

    #[test]
    fn recon_equal_to_input_gives_benefit_equal_to_compression(
        input in simplex(6),
        output in simplex(4),
    ) {
        let input = Pmf::from_probs(input).unwrap();
        let output = Pmf::from_probs(output).unwrap();
        let case = TransformCase::new(input.clone(), output.clone(), input.clone()).unwrap();
        let ac = input.entropy() - output.entropy();
        for spec in candidate_measures() {
            let b = benefit_bounded(&case, &spec).unwrap();
            prop_assert!(b.pd == 0.0);
            prop_assert!((b.benefit - ac).abs() < 1e-12);
        }
    }

    #[test]
    fn stage_sums_match_a_plain_fold_and_unit_weights_match_sum_order(
        table in criteria_table(),
    ) {
        // independent re-summation with explicit loops
        for stage in [Stage::One, Stage::TwoToFive, Stage::SixToNine] {
            let Ok(sums) = stage_sums(&table, stage) else { continue };
            for (mi, sum) in sums.iter().enumerate() {
                let mut fold = 0i64;
                for (ci, criterion) in table.criteria.iter().enumerate() {
                    if criterion.stage == stage {
                        if let Some(score) = table.scores[ci][mi] {
                            fold += score.value as i64;
                        }
                    }
                }
                prop_assert_eq!(sum.unwrap_or(i64::MIN), fold);
            }
        }
        // unit-weight ranking equals the descending total-sum order
        let ranked = weighted_rank(&table, &Weights::unit()).unwrap();
        let totals = sums_through_stage(&table, Stage::SixToNine);
        let mut by_sum: Vec<(usize, i64)> = totals
            .iter()
            .enumerate()
            .map(|(i, t)| (i, t.expect("full random tables have every sum")))
            .collect();
        by_sum.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let expected: Vec<String> = by_sum.iter().map(|(i, _)| table.measures[*i].clone()).collect();
        let got: Vec<String> = ranked.iter().map(|(name, _)| name.clone()).collect();
        prop_assert_eq!(got, expected);
    }
}

/// Random fully-scored tables: no eliminations, every stage present.
fn criteria_table() -> impl Strategy<Value = CriteriaTable> {
    (1usize..=6, 1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(measures, s1, s2, s3)| {
        let rows = s1 + s2 + s3;
        let stages: Vec<Stage> = std::iter::repeat_n(Stage::One, s1)
            .chain(std::iter::repeat_n(Stage::TwoToFive, s2))
            .chain(std::iter::repeat_n(Stage::SixToNine, s3))
            .collect();
        (
            prop::collection::vec(prop::collection::vec(0u8..=5, measures), rows),
            prop::collection::vec(0usize..3, rows),
        )
            .prop_map(move |(scores, importances)| CriteriaTable {
                measures: (0..measures).map(|i| format!("m{i}")).collect(),
                criteria: stages
                    .iter()
                    .zip(&importances)
                    .enumerate()
                    .map(|(i, (stage, imp))| Criterion {
                        name: format!("c{i}"),
                        importance: [Importance::Critical, Importance::Important, Importance::Helpful][*imp],
                        stage: *stage,
                    })
                    .collect(),
                scores: scores
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|value| Some(Score { value, comparison_only: false }))
                            .collect()
                    })
                    .collect(),
                eliminated_at: vec![None; measures],
            })
    })
}
