//! Brute-force verification of every bijection over all inputs up to a
//! weight bound. Failures are collected, never thrown.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::bijections::{
    bressoud_forward, bressoud_forward_original, extend_forward, extend_stages, glaisher_forward,
    pair_insert_stepwise, sylvester_forward, sylvester_pairwise, trace, Bijection, Rule, TraceStep,
};
use crate::enumeration::class_members;
use crate::{Partition, PartitionClass, Result};

/// What a verification run checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// Membership, statistic transport, round trip and injectivity of one map.
    Map(Bijection),
    /// Formula and pairwise Sylvester agree on `O(n)`.
    SylvesterAgreement,
    /// Interchange and subtract/sort/add Bressoud agree on `O(n) ∩ D(n)`.
    BressoudAgreement,
    /// `extend_forward(λ²) = 2·sylvester_forward(λ)` whenever `2|λ| ≤ max_n`.
    Squares,
    /// `extend_forward(ODS(n)) = Dle2(n)` as sets.
    Ods,
    /// `extend_forward(O(n)) = D(n)` and `bressoud_forward(OD(n)) = S(n)` as sets.
    Images,
}

impl Target {
    pub const ALL: [Target; 9] = [
        Target::Map(Bijection::Glaisher),
        Target::Map(Bijection::Sylvester),
        Target::Map(Bijection::Bressoud),
        Target::Map(Bijection::New),
        Target::SylvesterAgreement,
        Target::BressoudAgreement,
        Target::Squares,
        Target::Ods,
        Target::Images,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Target::Map(b) => b.name(),
            Target::SylvesterAgreement => "sylvester-agreement",
            Target::BressoudAgreement => "bressoud-agreement",
            Target::Squares => "squares",
            Target::Ods => "ods",
            Target::Images => "images",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown verification target {0:?}")]
pub struct UnknownTarget(pub String);

impl FromStr for Target {
    type Err = UnknownTarget;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let alias = match lower.as_str() {
            "sylvester-formula-vs-pairwise" => Some(Target::SylvesterAgreement),
            "bressoud-vs-original" => Some(Target::BressoudAgreement),
            _ => None,
        };
        alias
            .or_else(|| Self::ALL.into_iter().find(|t| t.label() == lower))
            .ok_or_else(|| UnknownTarget(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: Partition,
    pub property: String,
    pub observed: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input ({}): expected {}, observed {}",
            self.input, self.property, self.observed
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub range: RangeInclusive<u64>,
    pub label: String,
    /// Number of inputs examined.
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn new(target: Target, max_n: u64) -> Self {
        Self {
            range: 0..=max_n,
            label: target.label().to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(
        &mut self,
        input: &Partition,
        ok: bool,
        property: &str,
        observed: impl FnOnce() -> String,
    ) {
        if !ok {
            self.failures.push(Failure {
                input: input.clone(),
                property: property.to_string(),
                observed: observed(),
            });
        }
    }

    /// Records a failure for an `Err` and returns the value otherwise.
    fn ok<T>(&mut self, input: &Partition, property: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(input, false, property, || e.to_string());
                None
            }
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: n in {}..={}, {} checked, {} failures",
            self.label,
            self.range.start(),
            self.range.end(),
            self.checked,
            self.failures.len()
        )
    }
}

/// Runs `target` over every input of weight at most `max_n`.
pub fn verify(target: Target, max_n: u64) -> VerificationReport {
    let mut report = VerificationReport::new(target, max_n);
    match target {
        Target::Squares => {
            for n in 0..=max_n / 2 {
                check_squares(n, &mut report);
            }
        }
        _ => {
            for n in 0..=max_n {
                verify_weight(target, n, &mut report);
            }
        }
    }
    report
}

fn verify_weight(target: Target, n: u64, report: &mut VerificationReport) {
    match target {
        Target::Map(b) => check_map(b, n, report),
        Target::SylvesterAgreement => {
            for lam in class_members(n, PartitionClass::Odd) {
                report.checked += 1;
                let (Some(f), Some(p)) = (
                    report.ok(&lam, "sylvester formula succeeds", sylvester_forward(&lam)),
                    report.ok(
                        &lam,
                        "sylvester pairwise succeeds",
                        sylvester_pairwise(&lam),
                    ),
                ) else {
                    continue;
                };
                report.check(&lam, f == p, "formula = pairwise", || format!("{f} vs {p}"));
            }
        }
        Target::BressoudAgreement => {
            for lam in class_members(n, PartitionClass::OddDistinct) {
                report.checked += 1;
                let (Some(a), Some(b)) = (
                    report.ok(&lam, "interchange method succeeds", bressoud_forward(&lam)),
                    report.ok(
                        &lam,
                        "original method succeeds",
                        bressoud_forward_original(&lam),
                    ),
                ) else {
                    continue;
                };
                report.check(&lam, a == b, "interchange = original", || {
                    format!("{a} vs {b}")
                });
            }
        }
        Target::Squares => check_squares(n, report),
        Target::Ods => {
            let target_set: HashSet<Partition> =
                class_members(n, PartitionClass::DistinctGapsLe2).collect();
            check_image(
                n,
                PartitionClass::OddDistinctSmall,
                extend_forward,
                &target_set,
                report,
            );
        }
        Target::Images => {
            let d: HashSet<Partition> = class_members(n, PartitionClass::Distinct).collect();
            check_image(n, PartitionClass::Odd, extend_forward, &d, report);
            let s: HashSet<Partition> = class_members(n, PartitionClass::Splitting).collect();
            check_image(n, PartitionClass::OddDistinct, bressoud_forward, &s, report);
        }
    }
}

fn check_map(b: Bijection, n: u64, report: &mut VerificationReport) {
    let mut images = HashSet::new();
    let mut domain_size = 0usize;
    for lam in class_members(n, b.domain()) {
        report.checked += 1;
        domain_size += 1;
        let Some(mu) = report.ok(&lam, "forward map succeeds", b.forward(&lam)) else {
            continue;
        };
        report.check(&lam, mu.weight() == n, "weight preserved", || {
            mu.to_string()
        });
        report.check(
            &lam,
            mu.is_member(b.codomain()),
            &format!("image in {}", b.codomain()),
            || mu.to_string(),
        );
        if let Some(back) = report.ok(&lam, "inverse succeeds on the image", b.inverse(&mu)) {
            report.check(&lam, back == lam, "inverse(forward(λ)) = λ", || {
                back.to_string()
            });
        }
        check_statistics(b, &lam, &mu, report);
        if matches!(b, Bijection::Bressoud | Bijection::New) {
            if let Some(steps) = report.ok(&lam, "trace succeeds", trace(b, &lam)) {
                check_trace(&lam, &steps, &mu, report);
            }
        }
        images.insert(mu);
    }
    report.check(
        &Partition::empty(),
        images.len() == domain_size,
        "forward map injective",
        || format!("n={n}: {} images from {domain_size} inputs", images.len()),
    );
}

fn check_statistics(
    b: Bijection,
    lam: &Partition,
    mu: &Partition,
    report: &mut VerificationReport,
) {
    let len = lam.len() as u64;
    match b {
        Bijection::Glaisher => {
            report.check(
                lam,
                mu.odd_part_count() == lam.odd_multiplicity_count(),
                "ℓ_o(μ) = n_o(λ)",
                || {
                    format!(
                        "{} vs {}",
                        mu.odd_part_count(),
                        lam.odd_multiplicity_count()
                    )
                },
            );
        }
        Bijection::Sylvester => {
            report.check(lam, mu.alternating_sum() == len, "|μ|_a = ℓ(λ)", || {
                mu.alternating_sum().to_string()
            });
        }
        Bijection::Bressoud => {
            report.check(lam, mu.alternating_sum() == len, "|μ|_a = ℓ(λ)", || {
                mu.alternating_sum().to_string()
            });
            report.check(
                lam,
                mu.odd_part_count() as u64 == len,
                "ℓ_o(μ) = ℓ(λ)",
                || mu.odd_part_count().to_string(),
            );
            let expected = lam.len() + lam.odd_run_count();
            report.check(
                lam,
                mu.len() == expected,
                "ℓ(μ) = ℓ(λ) + ℓ_r(λ)",
                || format!("{} vs {expected}", mu.len()),
            );
        }
        Bijection::New => {
            report.check(lam, mu.alternating_sum() == len, "|μ|_a = ℓ(λ)", || {
                mu.alternating_sum().to_string()
            });
            report.check(
                lam,
                mu.odd_part_count() == lam.odd_multiplicity_count(),
                "ℓ_o(μ) = n_o(λ)",
                || {
                    format!(
                        "{} vs {}",
                        mu.odd_part_count(),
                        lam.odd_multiplicity_count()
                    )
                },
            );
            if lam.is_distinct() {
                let b = bressoud_forward(lam);
                report.check(
                    lam,
                    b.as_ref() == Ok(mu),
                    "extension agrees with Bressoud on OD",
                    || format!("{b:?}"),
                );
            }
            if let Ok(stages) = extend_stages(lam) {
                for (i, &part) in stages.alpha.parts().iter().enumerate() {
                    let stepwise = pair_insert_stepwise(&stages.gammas[i], part);
                    report.check(
                        lam,
                        stepwise.as_ref() == Ok(&stages.gammas[i + 1]),
                        "stepwise insertion = closed form",
                        || format!("{stepwise:?} at insertion {i}"),
                    );
                }
            }
        }
    }
}

/// Interchanges preserve entry sum, pair count, alternating sum and the
/// number of odd entries, and the trace ends at the image.
fn check_trace(
    lam: &Partition,
    steps: &[TraceStep],
    mu: &Partition,
    report: &mut VerificationReport,
) {
    for s in steps {
        if matches!(
            s.rule,
            Rule::PairInterchange | Rule::ReversePairInterchange | Rule::InsertionInterchange
        ) {
            let (x, y) = (&s.before, &s.after);
            let same = x.sum() == y.sum()
                && x.pair_count() == y.pair_count()
                && x.alternating_sum() == y.alternating_sum()
                && x.odd_entry_count() == y.odd_entry_count();
            report.check(
                lam,
                same,
                &format!("{} preserves pair statistics", s.rule),
                || format!("{x} -> {y}"),
            );
        }
    }
    let end = steps
        .last()
        .and_then(|s| s.after.to_partition())
        .unwrap_or_default();
    report.check(lam, &end == mu, "trace ends at the image", || {
        end.to_string()
    });
}

fn check_image(
    n: u64,
    domain: PartitionClass,
    map: fn(&Partition) -> Result<Partition>,
    expected: &HashSet<Partition>,
    report: &mut VerificationReport,
) {
    let mut image = HashSet::new();
    for lam in class_members(n, domain) {
        report.checked += 1;
        if let Some(mu) = report.ok(&lam, "map succeeds", map(&lam)) {
            image.insert(mu);
        }
    }
    report.check(
        &Partition::empty(),
        &image == expected,
        &format!("image of {domain}({n}) is the target set"),
        || format!("{} images, {} targets", image.len(), expected.len()),
    );
}

fn check_squares(n: u64, report: &mut VerificationReport) {
    for lam in class_members(n, PartitionClass::Odd) {
        report.checked += 1;
        let lhs = extend_forward(&lam.square());
        let rhs = sylvester_forward(&lam).map(|s| s.scale(2));
        report.check(
            &lam,
            lhs.is_ok() && lhs == rhs,
            "extend_forward(λ²) = 2·sylvester_forward(λ)",
            || format!("{lhs:?} vs {rhs:?}"),
        );
    }
}

/// An odd partition of weight at most `max_n` whose Glaisher image has
/// alternating sum different from its length.
pub fn glaisher_alternating_sum_counterexample(max_n: u64) -> Option<(Partition, Partition)> {
    (0..=max_n)
        .flat_map(|n| class_members(n, PartitionClass::Odd))
        .find_map(|lam| {
            let mu = glaisher_forward(&lam).ok()?;
            (mu.alternating_sum() != lam.len() as u64).then_some((lam, mu))
        })
}

/// Inverse round trips from the codomain side: `forward(inverse(μ)) = μ`.
pub fn verify_inverse_side(b: Bijection, max_n: u64) -> VerificationReport {
    let mut report = VerificationReport::new(Target::Map(b), max_n);
    report.label = format!("{}-inverse", b.name());
    for n in 0..=max_n {
        for mu in class_members(n, b.codomain()) {
            report.checked += 1;
            let Some(lam) = report.ok(&mu, "inverse succeeds", b.inverse(&mu)) else {
                continue;
            };
            report.check(
                &mu,
                lam.is_member(b.domain()),
                &format!("preimage in {}", b.domain()),
                || lam.to_string(),
            );
            let back = b.forward(&lam);
            report.check(
                &mu,
                back.as_ref() == Ok(&mu),
                "forward(inverse(μ)) = μ",
                || format!("{back:?}"),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_target_passes_small() {
        for t in Target::ALL {
            let r = verify(t, 12);
            assert!(r.passed(), "{r}: {:?}", r.failures.first());
            assert!(r.checked > 0, "{r}");
        }
    }

    #[test]
    fn aliases_parse() {
        assert_eq!(
            "bressoud-vs-original".parse(),
            Ok(Target::BressoudAgreement)
        );
        assert_eq!(
            "sylvester-formula-vs-pairwise".parse(),
            Ok(Target::SylvesterAgreement)
        );
        assert_eq!("NEW".parse(), Ok(Target::Map(Bijection::New)));
        assert!("nope".parse::<Target>().is_err());
    }

    #[test]
    fn glaisher_counterexample_exists() {
        let (lam, mu) = glaisher_alternating_sum_counterexample(16).unwrap();
        assert_ne!(mu.alternating_sum(), lam.len() as u64);
    }
}
