//! Exact checks of unimodality, log-concavity and related inequalities, real-rootedness
//! by Sturm sequences over the rationals, and a parallel scan of uniform matroids.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::combinatorics::binomial;
use crate::enumeration::{f_augmented_uniform, h_augmented_uniform};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

fn nonnegative(p: &Polynomial) -> Result<&[BigInt]> {
    match p.first_negative() {
        Some(i) => Err(Error::NegativeCoefficient(i)),
        None => Ok(p.coeffs()),
    }
}

/// Indices `(i, j)`, `i < j`, with `a_i > a_{i+1}` and `a_j < a_{j+1}`: a descent
/// followed later by an ascent.
pub fn non_unimodal_witness(p: &Polynomial) -> Result<Option<(usize, usize)>> {
    let a = nonnegative(p)?;
    let Some(i) = (0..a.len().saturating_sub(1)).find(|&i| a[i] > a[i + 1]) else {
        return Ok(None);
    };
    Ok((i + 1..a.len() - 1)
        .find(|&j| a[j] < a[j + 1])
        .map(|j| (i, j)))
}

pub fn is_unimodal(p: &Polynomial) -> Result<bool> {
    Ok(non_unimodal_witness(p)?.is_none())
}

/// A failure `a_i^2 < a_{i-1} a_{i+1}` with both products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConcavityFailure {
    pub index: usize,
    pub square: BigInt,
    pub product: BigInt,
}

pub fn log_concavity_failures(p: &Polynomial) -> Result<Vec<LogConcavityFailure>> {
    let a = nonnegative(p)?;
    Ok((1..a.len().saturating_sub(1))
        .filter_map(|i| {
            let square = &a[i] * &a[i];
            let product = &a[i - 1] * &a[i + 1];
            (square < product).then_some(LogConcavityFailure {
                index: i,
                square,
                product,
            })
        })
        .collect())
}

pub fn is_log_concave(p: &Polynomial) -> Result<bool> {
    Ok(log_concavity_failures(p)?.is_empty())
}

pub fn has_internal_zeros(p: &Polynomial) -> Result<bool> {
    let a = nonnegative(p)?;
    let support: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
    Ok(match (support.first(), support.last()) {
        (Some(&lo), Some(&hi)) => hi - lo + 1 > support.len(),
        _ => false,
    })
}

/// `a_i^2 C(m,i-1) C(m,i+1) ≥ a_{i-1} a_{i+1} C(m,i)^2` for every interior `i`.
pub fn is_ultra_log_concave(p: &Polynomial, m: usize) -> Result<bool> {
    let a = nonnegative(p)?;
    if let Some(degree) = p.degree() {
        if m < degree {
            return Err(Error::OrderTooSmall { order: m, degree });
        }
    }
    let c = |i: usize| binomial(m as u64, i as u64);
    Ok((1..a.len().saturating_sub(1))
        .all(|i| &a[i] * &a[i] * c(i - 1) * c(i + 1) >= &a[i - 1] * &a[i + 1] * c(i) * c(i)))
}

/// Dense polynomial over the rationals, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_int(p: &Polynomial) -> Self {
        QPoly(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Self {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
        .trim()
    }

    fn div_rem(&self, by: &QPoly) -> (QPoly, QPoly) {
        let mut rem = self.0.clone();
        if self.0.len() < by.0.len() {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.0.len() - by.0.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + by.degree()] / by.lead();
            for (j, b) in by.0.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(by.degree());
        (QPoly(quot).trim(), QPoly(rem).trim())
    }

    fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Number of distinct real roots, by Sturm's theorem.
    fn distinct_real_roots(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(QPoly(r.0.into_iter().map(|c| -c).collect()));
        }
        let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
        let at_pos_inf = seq.iter().map(|q| q.lead().is_positive()).collect();
        let at_neg_inf = seq
            .iter()
            .map(|q| q.lead().is_positive() ^ (q.degree() % 2 == 1))
            .collect();
        changes(at_neg_inf) - changes(at_pos_inf)
    }
}

/// Number of distinct real roots. Zero for constants, including the zero polynomial.
pub fn real_root_count(p: &Polynomial) -> usize {
    if p.is_zero() {
        return 0;
    }
    QPoly::from_int(p).distinct_real_roots()
}

/// Real roots counted with multiplicity: a root of multiplicity `k` is a root of each of
/// `p, gcd(p, p'), ...` for the first `k` terms.
pub fn real_root_count_with_multiplicity(p: &Polynomial) -> usize {
    if p.is_zero() {
        return 0;
    }
    let mut g = QPoly::from_int(p);
    let mut total = 0;
    while g.degree() > 0 {
        total += g.distinct_real_roots();
        g = g.gcd(&g.derivative());
    }
    total
}

/// Every root real; the zero polynomial counts as real-rooted.
pub fn is_real_rooted(p: &Polynomial) -> bool {
    match p.degree() {
        None => true,
        Some(d) => real_root_count_with_multiplicity(p) == d,
    }
}

fn padded(h: &Polynomial, d: usize) -> Result<Vec<BigInt>> {
    match h.degree() {
        Some(deg) if deg > d => Err(Error::DegreeExceeds {
            degree: deg,
            bound: d,
        }),
        _ => Ok(h.padded(d + 1)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
    NotApplicable(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::NotApplicable(_) => "not-applicable",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(s) | Verdict::NotApplicable(s) => Some(s),
        }
    }
}

/// `h_0 ≤ h_1 ≤ ... ≤ h_{⌊d/2⌋}` and `h_i ≤ h_{d-i}` for `i ≤ d/2`.
pub fn check_top_heavy(h: &Polynomial, d: usize) -> Result<Verdict> {
    let h = padded(h, d)?;
    for i in 0..d / 2 {
        if h[i] > h[i + 1] {
            return Ok(Verdict::Fails(format!(
                "h_{i} = {} > h_{} = {}",
                h[i],
                i + 1,
                h[i + 1]
            )));
        }
    }
    for i in 0..=d / 2 {
        if h[i] > h[d - i] {
            return Ok(Verdict::Fails(format!(
                "h_{i} = {} > h_{} = {}",
                h[i],
                d - i,
                h[d - i]
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// `h_i h_{d-i-1} ≤ h_{i+1} h_{d-i}` for `0 ≤ i < d`, the cross-multiplied form of the
/// ratio chain `h_0/h_d ≤ h_1/h_{d-1} ≤ ...`. Not applicable when some `h_i` vanishes.
pub fn check_2cm_chain(h: &Polynomial, d: usize) -> Result<Verdict> {
    let h = padded(h, d)?;
    if let Some(i) = h.iter().position(|c| c.is_zero()) {
        return Ok(Verdict::NotApplicable(format!("h_{i} = 0")));
    }
    for i in 0..d {
        let left = &h[i] * &h[d - i - 1];
        let right = &h[i + 1] * &h[d - i];
        if left > right {
            return Ok(Verdict::Fails(format!(
                "h_{i} h_{} = {left} > {right} = h_{} h_{}",
                d - i - 1,
                i + 1,
                d - i
            )));
        }
    }
    Ok(Verdict::Holds)
}

/// A property of a single polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Unimodal,
    LogConcave,
    NoInternalZeros,
    UltraLogConcave { order: usize },
    RealRooted,
    TopHeavy { degree: usize },
    TwoCmChain { degree: usize },
}

pub fn evaluate(p: &Polynomial, check: Check) -> Result<Verdict> {
    let fails = |b: bool, why: String| {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails(why)
        }
    };
    Ok(match check {
        Check::Unimodal => match non_unimodal_witness(p)? {
            None => Verdict::Holds,
            Some((i, j)) => Verdict::Fails(format!(
                "a_{i} = {} > a_{} = {}, a_{j} = {} < a_{} = {}",
                p.coeff(i),
                i + 1,
                p.coeff(i + 1),
                p.coeff(j),
                j + 1,
                p.coeff(j + 1)
            )),
        },
        Check::LogConcave => match log_concavity_failures(p)?.first() {
            None => Verdict::Holds,
            Some(f) => Verdict::Fails(format!(
                "a_{}^2 = {} < {} = a_{} a_{}",
                f.index,
                f.square,
                f.product,
                f.index - 1,
                f.index + 1
            )),
        },
        Check::NoInternalZeros => fails(!has_internal_zeros(p)?, "internal zero".to_string()),
        Check::UltraLogConcave { order } => fails(
            is_ultra_log_concave(p, order)?,
            format!("not ultra log-concave of order {order}"),
        ),
        Check::RealRooted => {
            let real = real_root_count_with_multiplicity(p);
            fails(
                is_real_rooted(p),
                format!(
                    "{real} real roots with multiplicity, degree {}",
                    p.degree().unwrap_or(0)
                ),
            )
        }
        Check::TopHeavy { degree } => check_top_heavy(p, degree)?,
        Check::TwoCmChain { degree } => check_2cm_chain(p, degree)?,
    })
}

/// Which polynomial of `Δ_{U_{d,n}}` a scan predicate looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Target {
    F,
    H,
}

/// A scan predicate such as `log-concave-f` or `top-heavy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Predicate {
    Unimodal(Target),
    LogConcave(Target),
    NoInternalZeros(Target),
    UltraLogConcave(Target),
    RealRooted(Target),
    TopHeavy,
    TwoCmChain,
}

impl Predicate {
    pub const NAMES: [&'static str; 12] = [
        "unimodal-f",
        "unimodal-h",
        "log-concave-f",
        "log-concave-h",
        "no-internal-zeros-f",
        "no-internal-zeros-h",
        "ultra-log-concave-f",
        "ultra-log-concave-h",
        "real-rooted-f",
        "real-rooted-h",
        "top-heavy",
        "2cm-chain",
    ];

    fn target(self) -> Target {
        match self {
            Predicate::Unimodal(t)
            | Predicate::LogConcave(t)
            | Predicate::NoInternalZeros(t)
            | Predicate::UltraLogConcave(t)
            | Predicate::RealRooted(t) => t,
            Predicate::TopHeavy | Predicate::TwoCmChain => Target::H,
        }
    }

    fn check(self, d: usize) -> Check {
        match self {
            Predicate::Unimodal(_) => Check::Unimodal,
            Predicate::LogConcave(_) => Check::LogConcave,
            Predicate::NoInternalZeros(_) => Check::NoInternalZeros,
            Predicate::UltraLogConcave(_) => Check::UltraLogConcave { order: d },
            Predicate::RealRooted(_) => Check::RealRooted,
            Predicate::TopHeavy => Check::TopHeavy { degree: d },
            Predicate::TwoCmChain => Check::TwoCmChain { degree: d },
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || {
            Error::InvalidArgument(format!(
                "unknown predicate {s:?}; expected one of {}",
                Predicate::NAMES.join(", ")
            ))
        };
        match s {
            "top-heavy" => return Ok(Predicate::TopHeavy),
            "2cm-chain" => return Ok(Predicate::TwoCmChain),
            _ => {}
        }
        let (kind, target) = s.rsplit_once('-').ok_or_else(unknown)?;
        let target = match target {
            "f" => Target::F,
            "h" => Target::H,
            _ => return Err(unknown()),
        };
        Ok(match kind {
            "unimodal" => Predicate::Unimodal(target),
            "log-concave" => Predicate::LogConcave(target),
            "no-internal-zeros" => Predicate::NoInternalZeros(target),
            "ultra-log-concave" => Predicate::UltraLogConcave(target),
            "real-rooted" => Predicate::RealRooted(target),
            _ => return Err(unknown()),
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = |t: &Target| if *t == Target::F { "f" } else { "h" };
        match self {
            Predicate::Unimodal(t) => write!(f, "unimodal-{}", suffix(t)),
            Predicate::LogConcave(t) => write!(f, "log-concave-{}", suffix(t)),
            Predicate::NoInternalZeros(t) => write!(f, "no-internal-zeros-{}", suffix(t)),
            Predicate::UltraLogConcave(t) => write!(f, "ultra-log-concave-{}", suffix(t)),
            Predicate::RealRooted(t) => write!(f, "real-rooted-{}", suffix(t)),
            Predicate::TopHeavy => f.write_str("top-heavy"),
            Predicate::TwoCmChain => f.write_str("2cm-chain"),
        }
    }
}

/// A predicate that did not hold for `Δ_{U_{d,n}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub d: usize,
    pub n: usize,
    pub predicate: Predicate,
    pub verdict: Verdict,
    pub polynomial: Polynomial,
}

/// Evaluates the predicates on `f(Δ_{U_{d,n}})` and `h(Δ_{U_{d,n}})` for every
/// `d ≤ n` in the ranges and returns the failures and non-applicable cases, sorted by
/// `(d, n, predicate)`.
pub fn scan_uniform(
    d_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
    predicates: &[Predicate],
) -> Result<Vec<ScanRow>> {
    let points: Vec<(usize, usize)> = d_range
        .flat_map(|d| {
            n_range
                .clone()
                .filter(move |&n| d <= n)
                .map(move |n| (d, n))
        })
        .collect();
    let per_point: Vec<Result<Vec<ScanRow>>> = points
        .par_iter()
        .map(|&(d, n)| {
            let f = f_augmented_uniform(d, n)?;
            let h = h_augmented_uniform(d, n)?;
            let mut rows = Vec::new();
            for &predicate in predicates {
                let poly = if predicate.target() == Target::F {
                    &f
                } else {
                    &h
                };
                let verdict = evaluate(poly, predicate.check(d))?;
                if !verdict.holds() {
                    rows.push(ScanRow {
                        d,
                        n,
                        predicate,
                        verdict,
                        polynomial: poly.clone(),
                    });
                }
            }
            Ok(rows)
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_point {
        rows.extend(r?);
    }
    rows.sort_by(|a, b| (a.d, a.n, a.predicate).cmp(&(b.d, b.n, b.predicate)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn sequence_predicates() {
        assert!(is_unimodal(&p(&[1, 3, 3, 1])).unwrap());
        assert!(!is_unimodal(&p(&[1, 0, 2])).unwrap());
        assert!(has_internal_zeros(&p(&[1, 0, 2])).unwrap());
        assert!(!has_internal_zeros(&p(&[0, 0, 2, 1])).unwrap());
        assert!(is_log_concave(&p(&[1, 4, 6, 4, 1])).unwrap());
        assert!(is_ultra_log_concave(&p(&[1, 4, 6, 4, 1]), 4).unwrap());
        assert!(is_log_concave(&p(&[1, 4, 7, 4, 1])).unwrap());
        assert!(!is_ultra_log_concave(&p(&[1, 4, 7, 4, 1]), 4).unwrap());
        assert!(matches!(
            is_unimodal(&p(&[1, -1])),
            Err(Error::NegativeCoefficient(1))
        ));
        assert!(matches!(
            is_ultra_log_concave(&p(&[1, 2, 1]), 1),
            Err(Error::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn roots() {
        assert_eq!(real_root_count(&p(&[1, 0, 1])), 0);
        assert_eq!(real_root_count(&p(&[1, 2])), 1);
        assert!(is_real_rooted(&p(&[1, 8, 3])));
        assert!(!is_real_rooted(&p(&[1, 0, 1])));
        // (x+1)^2 (x-2)
        let q = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[-2, 1]);
        assert_eq!(real_root_count(&q), 2);
        assert_eq!(real_root_count_with_multiplicity(&q), 3);
        assert!(is_real_rooted(&Polynomial::zero()));
        assert!(is_real_rooted(&p(&[5])));
    }

    #[test]
    fn top_heavy_and_chain() {
        assert!(check_top_heavy(&p(&[1, 5, 3]), 2).unwrap().holds());
        assert!(check_top_heavy(&p(&[1, 0, 2]), 2).unwrap().fails());
        assert!(check_2cm_chain(&p(&[1, 5, 3]), 2).unwrap().holds());
        assert!(matches!(
            check_2cm_chain(&p(&[1, 0, 2]), 2).unwrap(),
            Verdict::NotApplicable(_)
        ));
        assert!(check_top_heavy(&p(&[1, 2, 3]), 1).is_err());
    }

    #[test]
    fn predicate_names_round_trip() {
        for name in Predicate::NAMES {
            assert_eq!(name.parse::<Predicate>().unwrap().to_string(), name);
        }
        assert!("concave-g".parse::<Predicate>().is_err());
    }
}
