//! Sylvester's bijection: closed formula, pairwise form and inverse.

use crate::bijections::require;
use crate::bijections::trace::{Recorder, Rule};
use crate::composition::PairedComposition;
use crate::error::{Error, Result};
use crate::{Partition, PartitionClass};

/// `d = max{j | λ_j ≥ 2j−1}` and `ε = 1` iff `λ_d = 2d−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SylvesterAnchor {
    pub d: usize,
    pub epsilon: usize,
}

/// `None` for the empty partition.
pub fn sylvester_anchor(lambda: &Partition) -> Option<SylvesterAnchor> {
    // λ_j − (2j−1) is strictly decreasing in j, so the valid j form a prefix
    let d = (1..=lambda.len())
        .take_while(|&j| lambda.part(j - 1) >= 2 * j as u64 - 1)
        .last()?;
    let epsilon = usize::from(lambda.part(d - 1) == 2 * d as u64 - 1);
    Some(SylvesterAnchor { d, epsilon })
}

/// Sylvester's map by its closed formula. The image has `2d − ε` parts:
///
/// ```text
/// μ_{2j−1} = (λ_j+1)/2 + λ'_{2j−1} − 2j + 1,   j = 1..d
/// μ_{2j}   = (λ_j−1)/2 + λ'_{2j+1} − 2j + 1,   j = 1..d−ε
/// ```
pub fn sylvester_forward(lambda: &Partition) -> Result<Partition> {
    require(lambda, PartitionClass::Odd)?;
    let Some(SylvesterAnchor { d, epsilon }) = sylvester_anchor(lambda) else {
        return Ok(Partition::empty());
    };
    let conj = lambda.conjugate();
    // 1-based accessors, matching the formula
    let lam = |j: usize| lambda.part(j - 1) as i64;
    let col = |i: usize| conj.part(i - 1) as i64;

    let mut parts = Vec::with_capacity(2 * d);
    for j in 1..=d {
        let jj = j as i64;
        parts.push((lam(j) + 1) / 2 + col(2 * j - 1) - 2 * jj + 1);
        if j <= d - epsilon {
            parts.push((lam(j) - 1) / 2 + col(2 * j + 1) - 2 * jj + 1);
        }
    }
    let parts = parts
        .into_iter()
        .map(|p| u64::try_from(p).expect("Sylvester formula yields positive parts"))
        .collect();
    Partition::new(parts)
}

/// Sylvester's map built up by prepending the halves of each part, smallest
/// parts last, and moving the new pair right with
/// `(a,a−1 | b,c) ↦ (b+1,c+1 | a−1,a−2)` until the sequence is decreasing.
/// A `(1,0)` pair merges into its successor as `(1,0 | b,c) ↦ (b+1,c)`.
pub fn sylvester_pairwise(lambda: &Partition) -> Result<Partition> {
    let c = sylvester_pairwise_traced(lambda, Recorder::off())?;
    Ok(c.to_partition()
        .expect("pairwise Sylvester yields a partition"))
}

pub(crate) fn sylvester_pairwise_traced(
    lambda: &Partition,
    mut rec: Recorder<'_>,
) -> Result<PairedComposition> {
    require(lambda, PartitionClass::Odd)?;
    let mut nu = PairedComposition::default();
    for &part in lambda.parts() {
        let before = rec.snapshot(&nu);
        nu.prepend((part.div_ceil(2), (part - 1) / 2));
        rec.push(before, Rule::Prepend, 0, &nu);

        let mut j = 0;
        while j + 1 < nu.pair_count() {
            let (a, a1) = nu.pair(j);
            let (b, c) = nu.pair(j + 1);
            if a1 > b {
                break;
            }
            let before = rec.snapshot(&nu);
            if a == 1 {
                nu.entries_mut().splice(2 * j..2 * j + 4, [b + 1, c]);
                rec.push(before, Rule::ExceptionalMerge, j, &nu);
                break;
            }
            nu.set_pair(j, (b + 1, c + 1));
            nu.set_pair(j + 1, (a - 1, a - 2));
            rec.push(before, Rule::PairInterchange, j, &nu);
            j += 1;
        }
    }
    Ok(nu)
}

/// Row intervals `[start, end)` of the alternating shifted layout: each
/// even-numbered row ends one column before the row above it, each
/// odd-numbered row after the first starts where the row above starts.
/// Columns are translated so the leftmost box sits in column 0.
pub fn shifted_layout(lengths: &[u64]) -> Vec<(usize, usize)> {
    let mut rows: Vec<(i64, i64)> = Vec::with_capacity(lengths.len());
    for (i, &len) in lengths.iter().enumerate() {
        let len = len as i64;
        let row = match rows.last() {
            None => (0, len),
            Some(&(_, prev_end)) if i % 2 == 1 => (prev_end - 1 - len, prev_end - 1),
            Some(&(prev_start, _)) => (prev_start, prev_start + len),
        };
        rows.push(row);
    }
    let shift = rows.iter().map(|r| r.0).min().unwrap_or(0);
    rows.into_iter()
        .map(|(s, e)| ((s - shift) as usize, (e - shift) as usize))
        .collect()
}

/// Inverse of Sylvester's map.
///
/// In the shifted layout of `μ`, the leading odd-length columns give the
/// small parts of `λ`. The rest is a left-justified diagram `δ` from which
/// the first column together with the last two rows is peeled off
/// repeatedly, each peel giving one large part.
pub fn sylvester_inverse(mu: &Partition) -> Result<Partition> {
    require(mu, PartitionClass::Distinct)?;
    let rows = shifted_layout(mu.parts());
    sylvester_inverse_from_rows(&rows).ok_or_else(|| Error::NotInClass {
        class: PartitionClass::Distinct,
        partition: mu.clone(),
    })
}

/// The column-stripping and peeling half of [`sylvester_inverse`], starting
/// from row intervals `[start, end)`. Returns `None` if the geometry does not
/// decompose into odd parts.
pub fn sylvester_inverse_from_rows(rows: &[(usize, usize)]) -> Option<Partition> {
    let width = rows.iter().map(|r| r.1).max().unwrap_or(0);
    let column_len = |c: usize| rows.iter().filter(|r| r.0 <= c && c < r.1).count();

    let mut parts = Vec::new();
    let mut cut = 0;
    while cut < width && column_len(cut) % 2 == 1 {
        parts.push(column_len(cut) as u64);
        cut += 1;
    }

    let mut delta = Vec::new();
    for &(start, end) in rows {
        if end > cut {
            if start > cut {
                return None;
            }
            delta.push((end - cut) as u64);
        }
    }
    if delta.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }

    while delta.len() > 2 {
        let l = delta.len();
        parts.push(l as u64 + delta[l - 2] + delta[l - 1] - 2);
        delta.truncate(l - 2);
        for d in delta.iter_mut() {
            *d -= 1;
        }
        while delta.last() == Some(&0) {
            delta.pop();
        }
    }
    match delta[..] {
        [a, b] => parts.push(a + b),
        [a] => parts.push(a),
        _ => {}
    }

    if parts.iter().any(|p| p % 2 == 0) {
        return None;
    }
    Partition::new(parts).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn thirteen_squared() -> Partition {
        p(&[13, 13, 11, 5, 5, 3, 1, 1])
    }

    #[test]
    fn formula_example() {
        assert_eq!(
            sylvester_forward(&thirteen_squared()).unwrap(),
            p(&[14, 11, 10, 8, 6, 3])
        );
        assert_eq!(sylvester_forward(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(sylvester_forward(&p(&[])).unwrap(), p(&[]));
    }

    #[test]
    fn anchor_values() {
        assert_eq!(
            sylvester_anchor(&p(&[1])),
            Some(SylvesterAnchor { d: 1, epsilon: 1 })
        );
        assert_eq!(
            sylvester_anchor(&thirteen_squared()),
            Some(SylvesterAnchor { d: 3, epsilon: 0 })
        );
        // λ_3 = 5 = 2·3 − 1
        assert_eq!(
            sylvester_anchor(&p(&[5, 5, 5])),
            Some(SylvesterAnchor { d: 3, epsilon: 1 })
        );
        assert_eq!(sylvester_anchor(&p(&[])), None);
    }

    // Hand evaluation of the formula for (5,5,5): λ' = (3,3,3,3,3), d = 3,
    // ε = 1, so μ = (3+3−1, 2+3−1, 3+3−3, 2+3−3, 3+3−5) = (5,4,3,2,1).
    // Pairwise: (3,2|3,2) → (4,3|2,1); (3,2|4,3|2,1) → (5,4|2,1|2,1) → (5,4|3,2|1,0).
    #[test]
    fn five_cubed_by_hand() {
        let lam = p(&[5, 5, 5]);
        assert_eq!(sylvester_forward(&lam).unwrap(), p(&[5, 4, 3, 2, 1]));
        assert_eq!(sylvester_pairwise(&lam).unwrap(), p(&[5, 4, 3, 2, 1]));
    }

    #[test]
    fn pairwise_example() {
        assert_eq!(
            sylvester_pairwise(&thirteen_squared()).unwrap(),
            p(&[14, 11, 10, 8, 6, 3])
        );
        assert_eq!(sylvester_pairwise(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(sylvester_pairwise(&p(&[1, 1, 1])).unwrap(), p(&[3]));
    }

    #[test]
    fn pairwise_intermediate() {
        // prepending (3,2) to (9,8|7,6|4,3)
        let mut steps = Vec::new();
        let lam = p(&[13, 13, 11, 5]);
        let nu = sylvester_pairwise_traced(&lam, Recorder::on(&mut steps)).unwrap();
        assert_eq!(nu.entries(), &[10, 9, 8, 7, 5, 3]);
        let prepend = steps.iter().rposition(|s| s.rule == Rule::Prepend).unwrap();
        assert_eq!(steps[prepend].before.entries(), &[9, 8, 7, 6, 4, 3]);
    }

    #[test]
    fn layout_of_fourteen_eleven() {
        let rows = shifted_layout(&[14, 11, 10, 8, 6, 3]);
        assert_eq!(
            rows,
            vec![(0, 14), (2, 13), (2, 12), (3, 11), (3, 9), (5, 8)]
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            sylvester_inverse(&p(&[14, 11, 10, 8, 6, 3])).unwrap(),
            thirteen_squared()
        );
        assert_eq!(sylvester_inverse(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(sylvester_inverse(&p(&[3])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(sylvester_inverse(&p(&[])).unwrap(), p(&[]));
    }

    #[test]
    fn peel_sequence() {
        // (9,8,7,6,4,3) gives 11, (8,7,6,5) gives 13, (7,6) gives 13
        let rows: Vec<(usize, usize)> = [9, 8, 7, 6, 4, 3].iter().map(|&l| (0, l)).collect();
        // a left-justified diagram has no odd leading column when ℓ is even
        assert_eq!(
            sylvester_inverse_from_rows(&rows).unwrap(),
            p(&[13, 13, 11])
        );
    }
}
