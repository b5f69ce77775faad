//! Parametric ideal families with closed-form power behavior.
//!
//! A family is described by `(m, p_1..p_m, a_2..a_m)` subject to
//! `p_1 = (a_i + 1) * p_i` and `p_2 + ... + p_{m-1} < p_1`. It assembles
//! `m` equigenerated component ideals whose sum `I` has a fully predictable
//! power structure: `I^k` collapses onto products of the first component,
//! and `mu(I^k)` follows an explicit two-branch formula. The parameter
//! chooser synthesizes families whose generator counts strictly decrease
//! up to a requested power before turning linear.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::equigenerated::EquigeneratedSpec;
use crate::error::{Error, ParamsError};
use crate::ideal::StaircaseIdeal;
use crate::monomial::MAX_EXPONENT;

/// Validated family parameters `(m, p_1..p_m, a_2..a_m)`.
///
/// Invariants enforced by [`FamilyParams::new`]:
/// - `m >= 1`, with `m = 1` the degenerate single-component family;
/// - every `p_i >= 2` and every `a_i >= 2`;
/// - `p_1 = (a_i + 1) * p_i` for `2 <= i <= m`;
/// - `p_2 + ... + p_{m-1} < p_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    p: Vec<u64>,
    a: Vec<u64>,
}

/// The assembled component ideals and their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub components: Vec<StaircaseIdeal>,
    pub ideal: StaircaseIdeal,
}

/// Per-power verification record: computed versus predicted generator
/// count, structural agreement of `I^k` with its predicted factored form,
/// Cohen-Macaulay type, and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuReport {
    pub k: u64,
    pub mu_computed: u64,
    pub mu_predicted: u64,
    pub structure_ok: bool,
    pub cm_type: u64,
    pub degree: u64,
}

impl MuReport {
    /// All per-row identities hold: the computed count matches the closed
    /// form, the power equals its predicted structure, and the type is
    /// `mu - 1`.
    pub fn consistent(&self) -> bool {
        self.mu_computed == self.mu_predicted
            && self.structure_ok
            && self.cm_type + 1 == self.mu_computed
    }
}

/// Sign of a consecutive difference `mu(I^{k+1}) - mu(I^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Minus => write!(f, "-"),
            Sign::Zero => write!(f, "0"),
            Sign::Plus => write!(f, "+"),
        }
    }
}

fn overflow() -> Error {
    Error::ExponentOverflow {
        limit: MAX_EXPONENT,
    }
}

impl FamilyParams {
    /// Validates `(p_1..p_m, a_2..a_m)`; errors identify the violated
    /// invariant.
    pub fn new(p: Vec<u64>, a: Vec<u64>) -> Result<Self, Error> {
        let m = p.len();
        if m == 0 {
            return Err(Error::InvalidParams(ParamsError::NoComponents));
        }
        if a.len() != m - 1 {
            return Err(Error::InvalidParams(ParamsError::LengthMismatch {
                p_len: m,
                a_len: a.len(),
            }));
        }
        for (idx, &value) in p.iter().enumerate() {
            if value < 2 {
                return Err(Error::InvalidParams(ParamsError::PTooSmall {
                    index: idx + 1,
                    value,
                }));
            }
        }
        for (idx, &value) in a.iter().enumerate() {
            if value < 2 {
                return Err(Error::InvalidParams(ParamsError::ATooSmall {
                    index: idx + 2,
                    value,
                }));
            }
        }
        let p1 = p[0];
        for i in 2..=m {
            let pi = p[i - 1];
            let ai = a[i - 2];
            let product = ai.checked_add(1).and_then(|f| f.checked_mul(pi));
            if product != Some(p1) {
                return Err(Error::InvalidParams(ParamsError::RatioBroken {
                    index: i,
                    p1,
                    pi,
                    ai,
                }));
            }
        }
        // p_2 + ... + p_{m-1}; saturation means the sum certainly reached p_1.
        let mut middle_sum: u64 = 0;
        for &pi in p.iter().take(m - 1).skip(1) {
            middle_sum = middle_sum.saturating_add(pi);
        }
        if middle_sum >= p1 {
            return Err(Error::InvalidParams(ParamsError::MiddleSumTooLarge {
                sum: middle_sum,
                p1,
            }));
        }
        Ok(FamilyParams { p, a })
    }

    /// Number of components.
    pub fn m(&self) -> usize {
        self.p.len()
    }

    /// `p_1 ..= p_m`.
    pub fn p(&self) -> &[u64] {
        &self.p
    }

    /// `a_2 ..= a_m` (empty when `m = 1`).
    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `a_i` by its 1-based paper-style index, `2 <= i <= m`.
    fn a_at(&self, i: usize) -> u64 {
        self.a[i - 2]
    }

    /// Degree of the `u`-th component, `1 <= u <= m`:
    /// `d_1 = (m + 2) p_1` and `d_u = d_1 + p_1 + p_2 + ... + p_{u-1}`.
    pub fn component_degree(&self, u: usize) -> Result<u64, Error> {
        let m = self.m();
        if u == 0 || u > m {
            return Err(Error::IndexOutOfRange { index: u, len: m });
        }
        let p1 = self.p[0];
        let d1 = (m as u64 + 2).checked_mul(p1).ok_or_else(overflow)?;
        let mut d = d1;
        for &pi in self.p.iter().take(u - 1) {
            d = d.checked_add(pi).ok_or_else(overflow)?;
        }
        Ok(d)
    }

    /// Builds the component ideals and their sum.
    ///
    /// Component 1 is `(x^{p_1}, y^{p_1}) * (x^{(m+1)p_1}, y^{(m+1)p_1})`,
    /// with four generators; component `i >= 2` is
    /// `x^{i p_1 + p_i} y^{(m+2-i) p_1 + p_2 + ... + p_i} (x^{p_i}, y^{p_i})^{a_i - 1}`,
    /// with `a_i` generators, equigenerated in degree `d_i`.
    pub fn build(&self) -> Result<Family, Error> {
        self.build_within(MAX_EXPONENT)
    }

    /// As [`FamilyParams::build`] with an explicit exponent ceiling.
    pub fn build_within(&self, limit: u64) -> Result<Family, Error> {
        let over = || Error::ExponentOverflow { limit };
        let m = self.m() as u64;
        let p1 = self.p[0];
        let mut components = Vec::with_capacity(self.m());

        let d1 = (m + 2).checked_mul(p1).ok_or_else(over)?;
        if d1 > limit {
            return Err(over());
        }
        components.push(
            EquigeneratedSpec::new(vec![0, p1, (m + 1) * p1, d1], d1)
                .expect("component-1 exponents are strictly increasing")
                .to_ideal(),
        );

        for i in 2..=self.m() {
            let pi = self.p[i - 1];
            let ai = self.a_at(i);
            let du = self.component_degree(i)?;
            if du > limit {
                return Err(over());
            }
            // x-exponents i*p_1 + v*p_i for v in 1..=a_i; all <= d_u.
            let base = (i as u64).checked_mul(p1).ok_or_else(over)?;
            let xexps: Vec<u64> = (1..=ai)
                .map(|v| {
                    v.checked_mul(pi)
                        .and_then(|vp| base.checked_add(vp))
                        .ok_or_else(over)
                })
                .collect::<Result<_, _>>()?;
            let spec = EquigeneratedSpec::new(xexps, du).map_err(|_| {
                Error::InvalidParams(ParamsError::RatioBroken {
                    index: i,
                    p1,
                    pi,
                    ai,
                })
            })?;
            components.push(spec.to_ideal());
        }

        let ideal = components
            .iter()
            .fold(StaircaseIdeal::zero(), |acc, c| acc.sum(c));
        Ok(Family { components, ideal })
    }

    /// Closed-form `mu(I^k)`:
    /// `(k+1)^2 + k (a_2 + ... + a_{m+1-k})` for `1 <= k <= m - 1`,
    /// `(m+2) k + 1` for `k >= m`.
    pub fn predicted_mu(&self, k: u64) -> Result<u64, Error> {
        assert!(k >= 1, "power must be positive");
        let m = self.m() as u64;
        if k >= m {
            return (m + 2)
                .checked_mul(k)
                .and_then(|v| v.checked_add(1))
                .ok_or_else(overflow);
        }
        let square = (k + 1).checked_mul(k + 1).ok_or_else(overflow)?;
        let mut tail: u64 = 0;
        for i in 2..=(self.m() + 1 - k as usize) {
            tail = tail.checked_add(self.a_at(i)).ok_or_else(overflow)?;
        }
        square
            .checked_add(k.checked_mul(tail).ok_or_else(overflow)?)
            .ok_or_else(overflow)
    }

    /// The predicted factored form of `I^k`:
    /// `I_1^{k-1} (I_1 + ... + I_{m+1-k})` for `1 <= k <= m - 1`, and
    /// `I_1^k` for `k >= m`. Computing `I^k` directly must give an equal
    /// ideal.
    pub fn predicted_power_structure(&self, k: u64) -> Result<StaircaseIdeal, Error> {
        self.predicted_power_structure_within(k, MAX_EXPONENT)
    }

    /// As [`FamilyParams::predicted_power_structure`] with an explicit
    /// exponent ceiling.
    pub fn predicted_power_structure_within(
        &self,
        k: u64,
        limit: u64,
    ) -> Result<StaircaseIdeal, Error> {
        assert!(k >= 1, "power must be positive");
        let family = self.build_within(limit)?;
        let m = self.m() as u64;
        if k >= m {
            return family.components[0].power_within(k, limit);
        }
        let keep = (m + 1 - k) as usize;
        let head = family.components[..keep]
            .iter()
            .fold(StaircaseIdeal::zero(), |acc, c| acc.sum(c));
        family.components[0]
            .power_within(k - 1, limit)?
            .product_within(&head, limit)
    }

    /// Computes `I^k` for `k = 1..=kmax` by iterated products and fills one
    /// [`MuReport`] per power.
    pub fn mu_table(&self, kmax: u64) -> Result<Vec<MuReport>, Error> {
        self.mu_table_within(kmax, MAX_EXPONENT)
    }

    /// As [`FamilyParams::mu_table`] with an explicit exponent ceiling.
    pub fn mu_table_within(&self, kmax: u64, limit: u64) -> Result<Vec<MuReport>, Error> {
        assert!(kmax >= 1, "kmax must be positive");
        let family = self.build_within(limit)?;
        let mut reports = Vec::with_capacity(kmax as usize);
        let mut power = family.ideal.clone();
        for k in 1..=kmax {
            let predicted = self.predicted_power_structure_within(k, limit)?;
            reports.push(MuReport {
                k,
                mu_computed: power.mu(),
                mu_predicted: self.predicted_mu(k)?,
                structure_ok: power == predicted,
                cm_type: power.cm_type()?,
                degree: power.degree()?,
            });
            if k < kmax {
                power = power.product_within(&family.ideal, limit)?;
            }
        }
        Ok(reports)
    }

    /// Signs of `mu(I^{k+1}) - mu(I^k)` for `k = 1..=kmax-1`, taken from
    /// computed (not predicted) generator counts.
    pub fn sign_sequence(&self, kmax: u64) -> Result<Vec<Sign>, Error> {
        self.sign_sequence_within(kmax, MAX_EXPONENT)
    }

    /// As [`FamilyParams::sign_sequence`] with an explicit exponent ceiling.
    pub fn sign_sequence_within(&self, kmax: u64, limit: u64) -> Result<Vec<Sign>, Error> {
        assert!(kmax >= 2, "kmax must be at least 2");
        let family = self.build_within(limit)?;
        let mut signs = Vec::with_capacity(kmax as usize - 1);
        let mut power = family.ideal.clone();
        let mut prev_mu = power.mu();
        for _ in 2..=kmax {
            power = power.product_within(&family.ideal, limit)?;
            let mu = power.mu();
            signs.push(if mu < prev_mu {
                Sign::Minus
            } else if mu == prev_mu {
                Sign::Zero
            } else {
                Sign::Plus
            });
            prev_mu = mu;
        }
        Ok(signs)
    }

    /// Derives `p` from `a` the way the parameter chooser does:
    /// `p_1 = prod (a_i + 1)`, `p_i = p_1 / (a_i + 1)`, doubling everything
    /// once if some `p_i` would fall below 2 (that happens only for
    /// `m = 2`, where the product has a single factor).
    pub fn from_a_values(a: Vec<u64>) -> Result<Self, Error> {
        let m = a.len() + 1;
        let mut p1: u64 = 1;
        for &ai in &a {
            p1 = ai
                .checked_add(1)
                .and_then(|f| p1.checked_mul(f))
                .ok_or_else(overflow)?;
        }
        if m == 1 {
            p1 = 2;
        }
        let scale_needed = a.iter().any(|&ai| p1 / (ai + 1) < 2) || p1 < 2;
        if scale_needed {
            p1 = p1.checked_mul(2).ok_or_else(overflow)?;
        }
        let mut p = vec![p1];
        p.extend(a.iter().map(|&ai| p1 / (ai + 1)));
        FamilyParams::new(p, a)
    }

    /// Derives the smallest valid `p` for given `a`: `p_1` is the least
    /// common multiple of the `a_i + 1`, scaled up until every
    /// `p_i = p_1 / (a_i + 1)` is at least 2.
    pub fn with_minimal_p(a: Vec<u64>) -> Result<Self, Error> {
        let m = a.len() + 1;
        if m == 1 {
            return FamilyParams::new(vec![2], a);
        }
        let mut base: u64 = 1;
        for &ai in &a {
            let f = ai.checked_add(1).ok_or_else(overflow)?;
            base = lcm(base, f).ok_or_else(overflow)?;
        }
        let mut p1 = base;
        while a.iter().any(|&ai| p1 / (ai + 1) < 2) {
            p1 = p1.checked_add(base).ok_or_else(overflow)?;
        }
        let mut p = vec![p1];
        p.extend(a.iter().map(|&ai| p1 / (ai + 1)));
        FamilyParams::new(p, a)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> Option<u64> {
    (a / gcd(a, b)).checked_mul(b)
}

/// Greedy `a_2..a_n` for the chooser: working from the top difference down,
/// each `a_i` is the least integer (at least `floor`) making the
/// corresponding consecutive difference of predicted generator counts
/// strictly negative, given the values already fixed.
fn greedy_a(n: usize, floor: u64) -> Result<Vec<u64>, Error> {
    let mut a: Vec<u64> = Vec::with_capacity(n - 1);
    for k in (1..n).rev() {
        // Difference mu(I^{k+1}) - mu(I^k) = 2k + 3 + (a_2+..+a_{n-k}) - k*a_{n+1-k};
        // a currently holds exactly a_2..a_{n-k}.
        let k = k as u64;
        let fixed = a
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .ok_or_else(overflow)?;
        let need = (2 * k)
            .checked_add(4)
            .and_then(|v| v.checked_add(fixed))
            .ok_or_else(overflow)?
            .div_ceil(k);
        a.push(need.max(floor).max(2));
    }
    Ok(a)
}

/// Synthesizes parameters with `m = n` whose generator counts strictly
/// decrease through the `n`-th power: `mu(I) > mu(I^2) > ... > mu(I^n) =
/// (n + 1)^2`, after which `mu(I^k) = (n + 2) k + 1`.
///
/// For `n = 1` this returns the degenerate single-component family with
/// `p_1 = 2`. For `n >= 2` the greedy rule above fixes `a_2..a_n`; if the
/// resulting middle sum `p_2 + ... + p_{n-1}` is not below `p_1`, the
/// floor on all `a_i` is raised by one and the greedy pass is rerun, which
/// terminates because the middle sum shrinks relative to `p_1` as the
/// floor grows.
pub fn choose_parameters(n: usize) -> Result<FamilyParams, Error> {
    if n == 0 {
        return Err(Error::InvalidParams(ParamsError::NoComponents));
    }
    if n == 1 {
        return FamilyParams::new(vec![2], Vec::new());
    }
    let mut floor = 2;
    loop {
        let a = greedy_a(n, floor)?;
        match FamilyParams::from_a_values(a) {
            Ok(p) => return Ok(p),
            Err(Error::InvalidParams(ParamsError::MiddleSumTooLarge { .. })) => {
                floor += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

/// A full end-to-end verification run: synthesized (or supplied)
/// parameters together with the per-power reports for `k = 1..=kmax`.
#[derive(Clone, Debug)]
pub struct Headline {
    pub n: usize,
    pub params: FamilyParams,
    pub reports: Vec<MuReport>,
}

impl Headline {
    /// Builds reports for the given parameters, treating `m` as `n`.
    pub fn for_params(params: FamilyParams, kmax: u64) -> Result<Self, Error> {
        Self::for_params_within(params, kmax, MAX_EXPONENT)
    }

    pub fn for_params_within(params: FamilyParams, kmax: u64, limit: u64) -> Result<Self, Error> {
        let reports = params.mu_table_within(kmax, limit)?;
        Ok(Headline {
            n: params.m(),
            params,
            reports,
        })
    }

    /// Whether every report is internally consistent and the count
    /// sequence has the promised shape: strictly decreasing through
    /// `k = n` with `mu(I^n) = (n + 1)^2`, then `mu(I^k) = (n + 2) k + 1`
    /// for `k >= n`.
    pub fn holds(&self) -> bool {
        let n = self.n as u64;
        if self.reports.iter().any(|r| !r.consistent()) {
            return false;
        }
        for w in self.reports.windows(2) {
            if w[1].k <= n && w[1].mu_computed >= w[0].mu_computed {
                return false;
            }
        }
        for r in &self.reports {
            if r.k == n && r.mu_computed != (n + 1) * (n + 1) {
                return false;
            }
            if r.k >= n && r.mu_computed != (n + 2) * r.k + 1 {
                return false;
            }
        }
        true
    }
}

/// Synthesizes parameters for `n` and verifies powers `1..=kmax`
/// (`kmax >= n`). The returned [`Headline`] exposes every computed versus
/// predicted value; [`Headline::holds`] is the overall verdict.
pub fn verify_headline(n: usize, kmax: u64) -> Result<Headline, Error> {
    assert!(kmax >= n as u64, "kmax must be at least n");
    let params = choose_parameters(n)?;
    Headline::for_params(params, kmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn m(a: u64, b: u64) -> Monomial {
        Monomial::new(a, b)
    }

    fn example_m5() -> FamilyParams {
        FamilyParams::new(vec![72, 18, 12, 8, 2], vec![3, 5, 8, 35]).unwrap()
    }

    #[test]
    fn smallest_family() {
        let params = FamilyParams::new(vec![2], vec![]).unwrap();
        let family = params.build().unwrap();
        assert_eq!(family.components.len(), 1);
        assert_eq!(family.ideal.gens(), &[m(0, 6), m(2, 4), m(4, 2), m(6, 0)]);
        assert_eq!(family.ideal.mu(), 4);
    }

    #[test]
    fn two_component_family() {
        let params = FamilyParams::new(vec![6, 2], vec![2]).unwrap();
        let family = params.build().unwrap();
        // I_1 = (x^6, y^6)(x^18, y^18), degree 24.
        assert_eq!(
            family.components[0].gens(),
            &[m(0, 24), m(6, 18), m(18, 6), m(24, 0)]
        );
        // I_2 = x^14 y^14 (x^2, y^2), degree 30.
        assert_eq!(family.components[1].gens(), &[m(14, 16), m(16, 14)]);
        assert_eq!(params.component_degree(2).unwrap(), 30);
        assert_eq!(family.ideal.mu(), 6);
        assert_eq!(
            family.ideal.gens(),
            &[m(0, 24), m(6, 18), m(14, 16), m(16, 14), m(18, 6), m(24, 0)]
        );
    }

    #[test]
    fn five_component_family_matches_published_generators() {
        let family = example_m5().build().unwrap();
        assert_eq!(
            family.components[0].gens(),
            &[m(0, 504), m(72, 432), m(432, 72), m(504, 0)]
        );
        // I_2 = x^162 y^378 (x^18, y^18)^2.
        assert_eq!(
            family.components[1].gens(),
            &[m(162, 414), m(180, 396), m(198, 378)]
        );
        // I_3 = x^228 y^318 (x^12, y^12)^4.
        assert_eq!(family.components[2].gens().first(), Some(&m(228, 366)));
        assert_eq!(family.components[2].gens().last(), Some(&m(276, 318)));
        assert_eq!(family.components[2].mu(), 5);
        // I_4 = x^296 y^254 (x^8, y^8)^7.
        assert_eq!(family.components[3].gens().first(), Some(&m(296, 310)));
        assert_eq!(family.components[3].gens().last(), Some(&m(352, 254)));
        assert_eq!(family.components[3].mu(), 8);
        // I_5 = x^362 y^184 (x^2, y^2)^34.
        assert_eq!(family.components[4].mu(), 35);
        assert_eq!(family.components[4].gens().first(), Some(&m(362, 252)));
        assert_eq!(family.components[4].gens().last(), Some(&m(430, 184)));
        assert_eq!(family.ideal.mu(), 55);

        // Every component is equigenerated in its predicted degree.
        for (i, c) in family.components.iter().enumerate() {
            let spec = EquigeneratedSpec::from_ideal(c).unwrap();
            assert_eq!(spec.degree(), example_m5().component_degree(i + 1).unwrap());
            assert_eq!(c.degree().unwrap(), spec.degree());
        }
    }

    #[test]
    fn component_degrees() {
        let params = example_m5();
        assert_eq!(params.component_degree(1).unwrap(), 504);
        assert_eq!(params.component_degree(2).unwrap(), 576);
        assert_eq!(params.component_degree(5).unwrap(), 614);
        assert!(matches!(
            params.component_degree(6),
            Err(Error::IndexOutOfRange { index: 6, len: 5 })
        ));
        assert!(matches!(
            params.component_degree(0),
            Err(Error::IndexOutOfRange { index: 0, len: 5 })
        ));
    }

    #[test]
    fn predicted_mu_sequences() {
        let params = example_m5();
        let predicted: Vec<u64> = (1..=6).map(|k| params.predicted_mu(k).unwrap()).collect();
        assert_eq!(predicted, vec![55, 41, 40, 37, 36, 43]);

        let two = FamilyParams::new(vec![6, 2], vec![2]).unwrap();
        assert_eq!(two.predicted_mu(1).unwrap(), 6);
        assert_eq!(two.predicted_mu(2).unwrap(), 9);
        assert_eq!(two.predicted_mu(5).unwrap(), 21);

        let one = FamilyParams::new(vec![2], vec![]).unwrap();
        for k in 1..=6 {
            assert_eq!(one.predicted_mu(k).unwrap(), 3 * k + 1);
        }
    }

    #[test]
    fn power_structure_of_degenerate_family() {
        let params = FamilyParams::new(vec![2], vec![]).unwrap();
        let family = params.build().unwrap();
        let cube = family.ideal.power(3).unwrap();
        assert_eq!(cube, params.predicted_power_structure(3).unwrap());
        // x-exponents {2s + t : s, t in [0, 3]} * 2 = {0..9} * 2 in degree 18.
        let spec = EquigeneratedSpec::from_ideal(&cube).unwrap();
        assert_eq!(spec.degree(), 18);
        assert_eq!(spec.xexps(), (0..=9).map(|j| 2 * j).collect::<Vec<_>>());
        assert_eq!(cube.mu(), 10);
    }

    #[test]
    fn invalid_parameter_reports() {
        assert_eq!(
            FamilyParams::new(vec![6, 4], vec![2]),
            Err(Error::InvalidParams(ParamsError::RatioBroken {
                index: 2,
                p1: 6,
                pi: 4,
                ai: 2,
            }))
        );
        assert_eq!(
            FamilyParams::new(vec![], vec![]),
            Err(Error::InvalidParams(ParamsError::NoComponents))
        );
        assert_eq!(
            FamilyParams::new(vec![6, 2], vec![]),
            Err(Error::InvalidParams(ParamsError::LengthMismatch {
                p_len: 2,
                a_len: 0,
            }))
        );
        assert_eq!(
            FamilyParams::new(vec![6, 1], vec![5]),
            Err(Error::InvalidParams(ParamsError::PTooSmall {
                index: 2,
                value: 1
            }))
        );
        assert_eq!(
            FamilyParams::new(vec![6, 2], vec![1]),
            Err(Error::InvalidParams(ParamsError::ATooSmall {
                index: 2,
                value: 1
            }))
        );
        // m = 5 with every a_i = 2 forces p_2 + p_3 + p_4 = p_1.
        assert_eq!(
            FamilyParams::new(vec![6, 2, 2, 2, 2], vec![2, 2, 2, 2]),
            Err(Error::InvalidParams(ParamsError::MiddleSumTooLarge {
                sum: 6,
                p1: 6
            }))
        );
    }

    #[test]
    fn chooser_small_cases() {
        let two = choose_parameters(2).unwrap();
        assert_eq!(two.a(), &[6]);
        assert_eq!(two.p(), &[14, 2]);

        let three = choose_parameters(3).unwrap();
        assert_eq!(three.a(), &[4, 10]);
        assert_eq!(three.p(), &[55, 11, 5]);

        let one = choose_parameters(1).unwrap();
        assert_eq!(one.p(), &[2]);
        assert!(one.a().is_empty());
    }

    #[test]
    fn chooser_output_is_always_valid() {
        for n in 1..=12 {
            let params = choose_parameters(n).unwrap();
            assert_eq!(params.m(), n.max(1));
            // Re-validating through the constructor checks every invariant.
            assert_eq!(
                FamilyParams::new(params.p().to_vec(), params.a().to_vec()).unwrap(),
                params
            );
        }
    }

    #[test]
    fn chooser_differences_stay_negative() {
        // The defining property of the greedy rule, on predicted counts.
        for n in 2..=12 {
            let params = choose_parameters(n).unwrap();
            for k in 1..n as u64 {
                let lo = params.predicted_mu(k).unwrap();
                let hi = params.predicted_mu(k + 1).unwrap();
                assert!(hi < lo, "n={n}, k={k}: {hi} !< {lo}");
            }
            let n64 = n as u64;
            assert_eq!(params.predicted_mu(n64).unwrap(), (n64 + 1) * (n64 + 1));
        }
    }

    #[test]
    fn minimal_p_examples() {
        let params = FamilyParams::with_minimal_p(vec![2]).unwrap();
        assert_eq!(params.p(), &[6, 2]);
        let params = FamilyParams::with_minimal_p(vec![2, 2]).unwrap();
        assert_eq!(params.p(), &[6, 2, 2]);
        let params = FamilyParams::with_minimal_p(vec![2, 3, 5]).unwrap();
        assert_eq!(params.p(), &[12, 4, 3, 2]);
    }

    #[test]
    fn headline_small() {
        let headline = verify_headline(2, 5).unwrap();
        let mus: Vec<u64> = headline.reports.iter().map(|r| r.mu_computed).collect();
        assert_eq!(mus, vec![10, 9, 13, 17, 21]);
        assert!(headline.holds());
    }

    #[test]
    fn sign_sequence_of_small_families() {
        // m = 3 with a_2 = a_3 = 2 (p = (9, 3, 3)): counts 8, 13, 16 rise.
        let params = FamilyParams::new(vec![9, 3, 3], vec![2, 2]).unwrap();
        assert_eq!(
            params.sign_sequence(3).unwrap(),
            vec![Sign::Plus, Sign::Plus]
        );
        // The chooser's n = 4 family strictly decreases through k = 4.
        let four = choose_parameters(4).unwrap();
        assert_eq!(
            four.sign_sequence(4).unwrap(),
            vec![Sign::Minus, Sign::Minus, Sign::Minus]
        );
    }
}
