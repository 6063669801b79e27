//! The extension of Bressoud's bijection to all odd partitions.
//!
//! Forward: split `λ = α² ∘ β` with `β` distinct, map `β` by Bressoud's
//! bijection, then insert the pairs `α_1², α_2², …` in order. Inverse:
//! strip the staircase columns encoded by the pair gaps, extract pairs from
//! the rightmost even-even pair, and finish with Bressoud's inverse.

use crate::bijections::bressoud::{
    bressoud_forward_traced, bressoud_inverse, interchange_to_exhaustion, pairing,
};
use crate::bijections::require;
use crate::bijections::trace::{Recorder, Rule, TraceStep};
use crate::composition::PairedComposition;
use crate::error::{Error, Result};
use crate::{Partition, PartitionClass};

fn insertion_error(gamma: &Partition, part: u64, reason: &'static str) -> Error {
    Error::InsertionPrecondition {
        gamma: gamma.clone(),
        part,
        reason,
    }
}

/// Checks the conditions under which `(2a−1)²` can be inserted into `γ`:
/// pair gaps are 1 or 2 for every pair before pair `a`, and a pair `j ≤ a`
/// with sum ≡ 2 (mod 4) has first entry at least `2(a+1−j)`.
pub fn check_insertable(gamma: &Partition, part: u64) -> Result<()> {
    if part.is_multiple_of(2) || part == 0 {
        return Err(insertion_error(
            gamma,
            part,
            "the inserted part must be odd",
        ));
    }
    if !gamma.is_distinct() {
        return Err(insertion_error(gamma, part, "parts must be distinct"));
    }
    let a = part.div_ceil(2);
    // pairs are 1-based here, padded pair included
    for j in 1..=gamma.len().div_ceil(2) as u64 {
        let first = gamma.part(2 * j as usize - 2);
        let second = gamma.part(2 * j as usize - 1);
        let gap = first - second;
        if j < a && gap != 1 && gap != 2 {
            return Err(insertion_error(
                gamma,
                part,
                "a pair gap before the landing site is not 1 or 2",
            ));
        }
        if j <= a && (first + second) % 4 == 2 && first < 2 * (a + 1 - j) {
            return Err(insertion_error(gamma, part, "an even pair is too small"));
        }
    }
    Ok(())
}

/// Inserts the pair `part²` (`part = 2a−1` odd) into `γ`, by the closed form.
///
/// If `2a−1 ≤ ℓ(γ)+1`, adds 2 to the first `2a−1` parts. Otherwise finds the
/// unique `j ≥ 0` with `γ_{2j} > 2a−2j−2 > γ_{2j+1}` (reading `γ_0 = ∞`) and
/// returns `(γ_1+2, …, γ_{2j}+2, 2a−2j, 2a−2j−2, γ_{2j+1}, …)`.
pub fn pair_insert(gamma: &Partition, part: u64) -> Result<Partition> {
    check_insertable(gamma, part)?;
    let a = part.div_ceil(2);
    let len = gamma.len();
    let mut parts = gamma.parts().to_vec();

    if part as usize <= len + 1 {
        parts.resize(len.max(part as usize), 0);
        for p in parts.iter_mut().take(part as usize) {
            *p += 2;
        }
        return Ok(Partition::from_sorted(parts));
    }

    let landing = (0..a).find(|&j| {
        let target = 2 * a - 2 * j - 2;
        let upper_ok = j == 0 || gamma.part(2 * j as usize - 1) > target;
        upper_ok && target > gamma.part(2 * j as usize)
    });
    let Some(j) = landing else {
        return Err(insertion_error(gamma, part, "no landing site for the pair"));
    };
    let j = j as usize;
    for p in parts.iter_mut().take(2 * j) {
        *p += 2;
    }
    let new_pair = [2 * a - 2 * j as u64, 2 * a - 2 * j as u64 - 2];
    parts.splice(2 * j..2 * j, new_pair);
    Ok(Partition::from_sorted(parts))
}

/// Pair insertion carried out step by step: prepend `(2a, 2a−2)` and move
/// the new pair right with `(x,x−2 | g,h) ↦ (g+2,h+2 | x−2,x−4)` until the
/// sequence is decreasing; a pair that has become `(2,0)` merges into its
/// successor as `(g+2,h)`.
pub fn pair_insert_stepwise(gamma: &Partition, part: u64) -> Result<Partition> {
    check_insertable(gamma, part)?;
    let c = insert_steps(gamma, part, Recorder::off());
    c.to_partition().ok_or_else(|| {
        insertion_error(gamma, part, "stepwise insertion did not end in a partition")
    })
}

fn insert_steps(gamma: &Partition, part: u64, mut rec: Recorder<'_>) -> PairedComposition {
    let a = part.div_ceil(2);
    let mut c = PairedComposition::from_partition(gamma);
    let before = rec.snapshot(&c);
    c.prepend((2 * a, 2 * a - 2));
    rec.push(before, Rule::Prepend, 0, &c);

    let mut j = 0;
    while j + 1 < c.pair_count() {
        let (x, _) = c.pair(j);
        let (g, h) = c.pair(j + 1);
        if x - 2 > g {
            break;
        }
        let before = rec.snapshot(&c);
        if x == 2 {
            c.entries_mut().splice(2 * j..2 * j + 4, [g + 2, h]);
            rec.push(before, Rule::ExceptionalMerge, j, &c);
            break;
        }
        c.set_pair(j, (g + 2, h + 2));
        c.set_pair(j + 1, (x - 2, x - 4));
        rec.push(before, Rule::InsertionInterchange, j, &c);
        j += 1;
    }
    c
}

/// Every intermediate of the forward map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStages {
    pub alpha: Partition,
    pub beta: Partition,
    /// `γ^(0) = bressoud(β)` followed by one entry per inserted pair.
    pub gammas: Vec<Partition>,
}

impl ExtensionStages {
    pub fn image(&self) -> &Partition {
        self.gammas.last().expect("gammas always holds γ^(0)")
    }
}

pub fn extend_stages(lambda: &Partition) -> Result<ExtensionStages> {
    require(lambda, PartitionClass::Odd)?;
    let (alpha, beta) = lambda.split_square_free();
    let gamma0 = bressoud_forward_traced(&beta, Recorder::off())?
        .to_partition()
        .expect("Bressoud's map yields a partition");
    let mut gammas = vec![gamma0];
    for &part in alpha.parts() {
        let next = pair_insert(gammas.last().unwrap(), part)?;
        gammas.push(next);
    }
    Ok(ExtensionStages {
        alpha,
        beta,
        gammas,
    })
}

pub fn extend_forward(lambda: &Partition) -> Result<Partition> {
    Ok(extend_stages(lambda)?.image().clone())
}

pub(crate) fn extend_forward_traced(
    lambda: &Partition,
    steps: &mut Vec<TraceStep>,
) -> Result<PairedComposition> {
    require(lambda, PartitionClass::Odd)?;
    let (alpha, beta) = lambda.split_square_free();
    // π is built by prepending its pairs, last pair first
    let pi = pairing(&beta)?;
    let mut c = PairedComposition::default();
    for (x, y) in pi.pairs().collect::<Vec<_>>().into_iter().rev() {
        let before = c.clone();
        c.prepend((x, y));
        steps.push(TraceStep {
            before,
            after: c.clone(),
            rule: Rule::Prepend,
            position: 0,
        });
    }
    interchange_to_exhaustion(&mut c, Recorder::on(steps));
    let mut gamma = c.to_partition().expect("Bressoud's map yields a partition");
    let mut last = c;
    for &part in alpha.parts() {
        check_insertable(&gamma, part)?;
        if part as usize <= gamma.len() + 1 {
            let next = pair_insert(&gamma, part)?;
            let after = PairedComposition::from_partition(&next);
            steps.push(TraceStep {
                before: PairedComposition::from_partition(&gamma),
                after: after.clone(),
                rule: Rule::AddTwoPrefix,
                position: 0,
            });
            gamma = next;
            last = after;
        } else {
            last = insert_steps(&gamma, part, Recorder::on(steps));
            gamma = last.to_partition().ok_or_else(|| {
                insertion_error(
                    &gamma,
                    part,
                    "stepwise insertion did not end in a partition",
                )
            })?;
        }
    }
    Ok(last)
}

/// Every intermediate of the inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseStages {
    /// Pairs removed with the staircase columns, as single values `2j−1`.
    pub staircase_pairs: Vec<u64>,
    /// `γ` after the staircase columns are removed.
    pub after_staircase: Partition,
    /// Pairs extracted from even-even pairs, in extraction order.
    pub extracted_pairs: Vec<u64>,
    /// The splitting partition left at the end.
    pub splitting: Partition,
    pub result: Partition,
}

pub fn extend_inverse_stages(mu: &Partition) -> Result<InverseStages> {
    require(mu, PartitionClass::Distinct)?;
    let len = mu.len();
    let t = len.div_ceil(2);

    // m_j with μ_{2j−1} − μ_{2j} − 2m_j ∈ {1, 2}
    let m: Vec<u64> = (0..t)
        .map(|j| (mu.part(2 * j) - mu.part(2 * j + 1) - 1) / 2)
        .collect();
    let mut staircase_pairs = Vec::new();
    for j in (0..t).rev() {
        staircase_pairs.extend(std::iter::repeat_n(2 * j as u64 + 1, m[j] as usize));
    }
    // conjugate of ((2t−1)^{2m_t}, …, 1^{2m_1}): entry i sums 2m_j over 2j−1 ≥ i
    let mut gamma = Vec::with_capacity(len);
    for i in 0..len {
        let strip: u64 = (i.div_ceil(2)..t).map(|j| 2 * m[j]).sum();
        gamma.push(mu.part(i) - strip);
    }
    let not_distinct = || Error::NotInClass {
        class: PartitionClass::Distinct,
        partition: mu.clone(),
    };
    let after_staircase = Partition::from_padded(gamma).ok_or_else(not_distinct)?;

    let mut gamma = after_staircase.clone();
    let mut extracted_pairs = Vec::new();
    while !gamma.is_member(PartitionClass::Splitting) {
        let j = (0..gamma.len().div_ceil(2))
            .rev()
            .find(|&j| gamma.part(2 * j) % 2 == 0 && gamma.part(2 * j + 1) % 2 == 0)
            .ok_or_else(not_distinct)?;
        extracted_pairs.push(gamma.part(2 * j) + 2 * j as u64 - 1);
        let mut rest: Vec<u64> = gamma.parts()[..2 * j].iter().map(|p| p - 2).collect();
        rest.extend(gamma.parts().iter().skip(2 * j + 2));
        gamma = Partition::from_padded(rest).ok_or_else(not_distinct)?;
    }

    let beta = bressoud_inverse(&gamma)?;
    let pairs: Vec<u64> = staircase_pairs
        .iter()
        .chain(&extracted_pairs)
        .copied()
        .collect();
    let alpha = Partition::new(pairs)?;
    let result = alpha.square().concat(&beta);
    Ok(InverseStages {
        staircase_pairs,
        after_staircase,
        extracted_pairs,
        splitting: gamma,
        result,
    })
}

pub fn extend_inverse(mu: &Partition) -> Result<Partition> {
    Ok(extend_inverse_stages(mu)?.result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn worked_example() -> Partition {
        Partition::from_multiplicities(&[(13, 4), (11, 2), (9, 1), (5, 5), (3, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(
            pair_insert(&p(&[16, 14, 12, 10, 7, 5, 3, 2]), 11).unwrap(),
            p(&[18, 16, 14, 12, 9, 7, 6, 4, 3, 2])
        );
        assert_eq!(
            pair_insert(&p(&[14, 12, 7, 5, 3, 2]), 13).unwrap(),
            p(&[16, 14, 12, 10, 7, 5, 3, 2])
        );
        assert_eq!(
            pair_insert(&p(&[18, 16, 14, 12, 9, 7, 6, 4, 3, 2]), 5).unwrap(),
            p(&[20, 18, 16, 14, 11, 7, 6, 4, 3, 2])
        );
        assert_eq!(pair_insert(&p(&[]), 1).unwrap(), p(&[2]));
        assert_eq!(
            pair_insert(&p(&[7, 5, 3, 2]), 13).unwrap(),
            p(&[14, 12, 7, 5, 3, 2])
        );
    }

    #[test]
    fn stepwise_matches_closed_form_on_examples() {
        for (gamma, part) in [
            (p(&[16, 14, 12, 10, 7, 5, 3, 2]), 11),
            (p(&[14, 12, 7, 5, 3, 2]), 13),
            (p(&[18, 16, 14, 12, 9, 7, 6, 4, 3, 2]), 5),
            (p(&[]), 1),
            (p(&[]), 3),
            (p(&[3]), 1),
        ] {
            assert_eq!(
                pair_insert_stepwise(&gamma, part).unwrap(),
                pair_insert(&gamma, part).unwrap(),
                "{gamma} <- {part}^2"
            );
        }
    }

    #[test]
    fn insertion_rejects_bad_gamma() {
        // (2) has an even pair (2,0) smaller than 2(a+1−1) = 4 for a = 2
        assert!(pair_insert(&p(&[2]), 3).is_err());
        assert!(pair_insert(&p(&[9, 5]), 5).is_err());
        assert!(pair_insert(&p(&[3]), 4).is_err());
    }

    #[test]
    fn forward_worked_example() {
        let stages = extend_stages(&worked_example()).unwrap();
        assert_eq!(stages.alpha, p(&[13, 13, 11, 5, 5, 3, 1, 1]));
        assert_eq!(stages.beta, p(&[9, 5, 3]));
        assert_eq!(stages.gammas[0], p(&[7, 5, 3, 2]));
        assert_eq!(stages.gammas[1], p(&[14, 12, 7, 5, 3, 2]));
        assert_eq!(stages.gammas[2], p(&[16, 14, 12, 10, 7, 5, 3, 2]));
        assert_eq!(stages.gammas[3], p(&[18, 16, 14, 12, 9, 7, 6, 4, 3, 2]));
        assert_eq!(stages.gammas[4], p(&[20, 18, 16, 14, 11, 7, 6, 4, 3, 2]));
        assert_eq!(stages.gammas[5], p(&[22, 20, 18, 16, 13, 7, 6, 4, 3, 2]));
        assert_eq!(stages.gammas[6], p(&[24, 22, 20, 16, 13, 7, 6, 4, 3, 2]));
        assert_eq!(stages.gammas[7], p(&[26, 22, 20, 16, 13, 7, 6, 4, 3, 2]));
        assert_eq!(stages.image(), &p(&[28, 22, 20, 16, 13, 7, 6, 4, 3, 2]));
    }

    #[test]
    fn forward_small() {
        // (1,1): α = (1), β = (), γ^(0) = (), insert 1² → (2)
        assert_eq!(extend_forward(&p(&[1, 1])).unwrap(), p(&[2]));
        assert_eq!(extend_forward(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(extend_forward(&p(&[])).unwrap(), p(&[]));
        let squared =
            Partition::from_multiplicities(&[(13, 4), (11, 2), (5, 4), (3, 2), (1, 4)]).unwrap();
        assert_eq!(
            extend_forward(&squared).unwrap(),
            p(&[28, 22, 20, 16, 12, 6])
        );
    }

    #[test]
    fn inverse_worked_example() {
        let mu = p(&[28, 22, 20, 16, 13, 7, 6, 4, 3, 2]);
        let stages = extend_inverse_stages(&mu).unwrap();
        assert_eq!(
            stages.after_staircase,
            p(&[18, 16, 14, 12, 9, 7, 6, 4, 3, 2])
        );
        let mut staircase = stages.staircase_pairs.clone();
        staircase.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(staircase, vec![5, 5, 3, 1, 1]);
        assert_eq!(stages.extracted_pairs, vec![11, 13, 13]);
        assert_eq!(stages.splitting, p(&[7, 5, 3, 2]));
        assert_eq!(stages.result, worked_example());
    }

    #[test]
    fn inverse_comparison_value() {
        let mu = p(&[17, 16, 14, 10, 7, 4, 2, 1]);
        let expected =
            Partition::from_multiplicities(&[(21, 1), (11, 2), (9, 1), (5, 2), (3, 3)]).unwrap();
        assert_eq!(extend_inverse(&mu).unwrap(), expected);
        assert_eq!(extend_inverse(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(extend_inverse(&p(&[2])).unwrap(), p(&[1, 1]));
    }
}
