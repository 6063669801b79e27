//! Bressoud's bijection from odd-and-distinct partitions onto splitting
//! partitions, via pair interchanges.

use crate::bijections::require;
use crate::bijections::trace::{Recorder, Rule};
use crate::composition::PairedComposition;
use crate::error::{Error, Result};
use crate::{Partition, PartitionClass};

/// The paired composition of an odd-and-distinct partition.
///
/// Each run `2m−1, 2m−3, …` is paired off from the top; a leftover smallest
/// term `x` of an odd-length run is doubled to `((x+1)/2, (x−1)/2)`.
pub fn pairing(lambda: &Partition) -> Result<PairedComposition> {
    require(lambda, PartitionClass::OddDistinct)?;
    let mut entries = Vec::with_capacity(2 * lambda.len());
    for run in lambda.runs() {
        let terms: Vec<u64> = run.terms().collect();
        for chunk in terms.chunks(2) {
            match *chunk {
                [x, y] => entries.extend([x, y]),
                [x] => entries.extend([x.div_ceil(2), (x - 1) / 2]),
                _ => unreachable!(),
            }
        }
    }
    Ok(PairedComposition::from_entries(entries))
}

/// `(a+1,a | 2b+1,2b−1)` with `a ≤ 2b+1` (and `a ≥ 2`).
fn interchange_applies(c: &PairedComposition, j: usize) -> bool {
    if j + 1 >= c.pair_count() {
        return false;
    }
    let (x0, x1) = c.pair(j);
    let (y0, y1) = c.pair(j + 1);
    x0 == x1 + 1 && y0 == y1 + 2 && y0 % 2 == 1 && y1 >= 1 && x1 >= 2 && x1 <= y0
}

/// `(2b+1,2b−1 | a+1,a)` with `2a+1 ≥ 2b−1` (and `2b−1 ≥ 3`).
fn reverse_applies(c: &PairedComposition, j: usize) -> bool {
    if j + 1 >= c.pair_count() {
        return false;
    }
    let (x0, x1) = c.pair(j);
    let (y0, y1) = c.pair(j + 1);
    x0 == x1 + 2 && x0 % 2 == 1 && x1 >= 3 && y0 == y1 + 1 && 2 * y1 + 1 >= x1
}

/// Rewrites pairs `j, j+1` from `(a+1,a | 2b+1,2b−1)` to
/// `(2b+3,2b+1 | a−1,a−2)`.
pub fn pair_interchange(c: &PairedComposition, j: usize) -> Result<PairedComposition> {
    if !interchange_applies(c, j) {
        return Err(Error::PatternMismatch {
            rule: Rule::PairInterchange.label(),
            composition: c.clone(),
            index: j,
        });
    }
    let mut out = c.clone();
    apply_interchange(&mut out, j);
    Ok(out)
}

/// Rewrites pairs `j, j+1` from `(2b+1,2b−1 | a+1,a)` to
/// `(a+3,a+2 | 2b−1,2b−3)`.
pub fn reverse_pair_interchange(c: &PairedComposition, j: usize) -> Result<PairedComposition> {
    if !reverse_applies(c, j) {
        return Err(Error::PatternMismatch {
            rule: Rule::ReversePairInterchange.label(),
            composition: c.clone(),
            index: j,
        });
    }
    let mut out = c.clone();
    apply_reverse(&mut out, j);
    Ok(out)
}

fn apply_interchange(c: &mut PairedComposition, j: usize) {
    let (_, a) = c.pair(j);
    let (y0, y1) = c.pair(j + 1);
    c.set_pair(j, (y0 + 2, y1 + 2));
    c.set_pair(j + 1, (a - 1, a - 2));
}

fn apply_reverse(c: &mut PairedComposition, j: usize) {
    let (_, x1) = c.pair(j);
    let (_, a) = c.pair(j + 1);
    c.set_pair(j, (a + 3, a + 2));
    c.set_pair(j + 1, (x1, x1 - 2));
}

pub fn bressoud_forward(lambda: &Partition) -> Result<Partition> {
    let c = bressoud_forward_traced(lambda, Recorder::off())?;
    Ok(c.to_partition()
        .expect("pair interchanges end in a partition"))
}

/// Pair interchanges applied at the leftmost applicable position until
/// none applies.
pub(crate) fn bressoud_forward_traced(
    lambda: &Partition,
    mut rec: Recorder<'_>,
) -> Result<PairedComposition> {
    let mut c = pairing(lambda)?;
    rec.push(
        rec.snapshot(&PairedComposition::from_partition(lambda)),
        Rule::Double,
        0,
        &c,
    );
    interchange_to_exhaustion(&mut c, rec);
    Ok(c)
}

pub(crate) fn interchange_to_exhaustion(c: &mut PairedComposition, mut rec: Recorder<'_>) {
    while let Some(j) = (0..c.pair_count()).find(|&j| interchange_applies(c, j)) {
        let before = rec.snapshot(c);
        apply_interchange(c, j);
        rec.push(before, Rule::PairInterchange, j, c);
    }
}

/// Bressoud's original procedure: subtract the staircase
/// `(2(t−1),2(t−1) | … | 2,2 | 0,0)`, sort the pairs by sum (descending,
/// ties by first entry), then add the staircase back.
pub fn bressoud_forward_original(lambda: &Partition) -> Result<Partition> {
    let pi = pairing(lambda)?;
    let t = pi.pair_count();
    let staircase = |i: usize| 2 * (t - 1 - i) as i64;
    let mut pairs: Vec<(i64, i64)> = pi
        .pairs()
        .enumerate()
        .map(|(i, (a, b))| (a as i64 - staircase(i), b as i64 - staircase(i)))
        .collect();
    pairs.sort_by(|p, q| (q.0 + q.1).cmp(&(p.0 + p.1)).then(q.0.cmp(&p.0)));
    let entries = pairs
        .into_iter()
        .enumerate()
        .flat_map(|(i, (a, b))| [a + staircase(i), b + staircase(i)])
        .map(|e| u64::try_from(e).expect("staircase restores non-negative entries"))
        .collect();
    PairedComposition::from_entries(entries)
        .to_partition()
        .ok_or_else(|| Error::NotInClass {
            class: PartitionClass::Splitting,
            partition: lambda.clone(),
        })
}

pub fn bressoud_inverse(mu: &Partition) -> Result<Partition> {
    bressoud_inverse_traced(mu, Recorder::off())
}

/// Reverse pair interchanges (leftmost first) until none applies, then
/// reads the parts off the resulting paired composition.
pub(crate) fn bressoud_inverse_traced(mu: &Partition, mut rec: Recorder<'_>) -> Result<Partition> {
    require(mu, PartitionClass::Splitting)?;
    let mut c = PairedComposition::from_partition(mu);
    while let Some(j) = (0..c.pair_count()).find(|&j| reverse_applies(&c, j)) {
        let before = rec.snapshot(&c);
        apply_reverse(&mut c, j);
        rec.push(before, Rule::ReversePairInterchange, j, &c);
    }
    read_pairing(&c)
}

/// The odd-and-distinct partition whose paired composition is `c`.
pub fn read_pairing(c: &PairedComposition) -> Result<Partition> {
    let mut parts = Vec::with_capacity(2 * c.pair_count());
    for (x, y) in c.pairs() {
        if x == y + 2 && x % 2 == 1 {
            parts.extend([x, y]);
        } else if x == y + 1 {
            parts.push(2 * y + 1);
        } else {
            return Err(Error::NotAPairing(c.clone()));
        }
    }
    let lambda = Partition::new(parts).map_err(|_| Error::NotAPairing(c.clone()))?;
    match pairing(&lambda) {
        Ok(pi) if &pi == c => Ok(lambda),
        _ => Err(Error::NotAPairing(c.clone())),
    }
}
