//! Weighted finite-dimensional sequence spaces `ℓ_r^n` and their duals.
//!
//! Every sup over a dual unit ball in this crate is taken over the ball of a
//! concrete `NormedSpace`, so norming functionals and ball retractions are
//! available in closed form. The pairing is the plain coordinate pairing
//! `⟨x, x'⟩ = Σ xᵢ x'ᵢ`; weights move to the dual side with the conjugate
//! exponent so that Hölder's inequality is tight.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Norm exponent `r ∈ [1, ∞]`. Serializes as a number, with `"inf"`
/// accepted for the sup norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn conjugate(self) -> Exponent {
        match self {
            Exponent::Infinity => Exponent::Finite(1.0),
            Exponent::Finite(r) if r == 1.0 => Exponent::Infinity,
            Exponent::Finite(r) => Exponent::Finite(r / (r - 1.0)),
        }
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            Exponent::Finite(r) => Some(r),
            Exponent::Infinity => None,
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            Exponent::Finite(r) if !(r >= 1.0 && r.is_finite()) => Err(Error::InvalidParameter(
                format!("norm exponent must lie in [1, inf], got {r}"),
            )),
            _ => Ok(()),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(r) => s.serialize_f64(*r),
            Exponent::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(r) if r.is_infinite() && r > 0.0 => Ok(Exponent::Infinity),
            Raw::Num(r) => Ok(Exponent::Finite(r)),
            Raw::Str(s) if s.eq_ignore_ascii_case("inf") || s == "∞" => Ok(Exponent::Infinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "exponent must be a number or \"inf\", got \"{s}\""
            ))),
        }
    }
}

/// `ℓ_r^n` with strictly positive weights.
///
/// For finite `r` the norm is `(Σ wᵢ|xᵢ|^r)^(1/r)`; for `r = ∞` it is
/// `max wᵢ|xᵢ|`, the limit convention that makes dual weight bookkeeping
/// an involution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpace")]
pub struct NormedSpace {
    dim: usize,
    r: Exponent,
    weights: Vec<f64>,
}

#[derive(Deserialize)]
struct RawSpace {
    dim: usize,
    r: Exponent,
    #[serde(default)]
    weights: Option<Vec<f64>>,
}

impl TryFrom<RawSpace> for NormedSpace {
    type Error = Error;
    fn try_from(raw: RawSpace) -> Result<Self> {
        match raw.weights {
            Some(w) => NormedSpace::weighted(raw.dim, raw.r, w),
            None => NormedSpace::new(raw.dim, raw.r),
        }
    }
}

impl NormedSpace {
    /// Unit-weight `ℓ_r^n`.
    pub fn new(dim: usize, r: Exponent) -> Result<Self> {
        Self::weighted(dim, r, vec![1.0; dim])
    }

    pub fn weighted(dim: usize, r: Exponent, weights: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("space dimension must be >= 1".into()));
        }
        r.validate()?;
        if weights.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: weights.len() });
        }
        if weights.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
            return Err(Error::InvalidParameter("space weights must be positive".into()));
        }
        Ok(NormedSpace { dim, r, weights })
    }

    /// Shorthand for the spaces used throughout the tests.
    pub fn l(r: f64, dim: usize) -> Self {
        NormedSpace::new(dim, Exponent::Finite(r)).expect("valid exponent")
    }

    pub fn l_inf(dim: usize) -> Self {
        NormedSpace::new(dim, Exponent::Infinity).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn exponent(&self) -> Exponent {
        self.r
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1.0)
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        Ok(())
    }

    /// The `ℓ_r` norm of `x` in this space.
    pub fn norm(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(match self.r {
            Exponent::Infinity => self
                .weights
                .iter()
                .zip(x)
                .map(|(&w, &xi)| w * xi.abs())
                .fold(0.0, f64::max),
            Exponent::Finite(r) => {
                // Scale by the max to keep large exponents in range.
                let m = x.iter().map(|v| v.abs()).fold(0.0_f64, f64::max);
                if m == 0.0 {
                    return Ok(0.0);
                }
                let sum: f64 = self
                    .weights
                    .iter()
                    .zip(x)
                    .map(|(&w, &xi)| w * (xi.abs() / m).powf(r))
                    .sum();
                m * sum.powf(1.0 / r)
            }
        })
    }

    /// The dual space under the coordinate pairing: conjugate exponent,
    /// reciprocally adjusted weights. Applying it twice returns the
    /// original space up to floating-point roundoff in the weights.
    pub fn dual(&self) -> NormedSpace {
        let rp = self.r.conjugate();
        let weights = match self.r {
            Exponent::Finite(r) if r > 1.0 => {
                let rpf = rp.as_finite().expect("conjugate of r > 1 is finite");
                self.weights.iter().map(|w| w.powf(-rpf / r)).collect()
            }
            // r = 1 and r = inf both flip to reciprocal weights.
            _ => self.weights.iter().map(|w| 1.0 / w).collect(),
        };
        NormedSpace { dim: self.dim, r: rp, weights }
    }

    pub fn pairing(&self, x: &[f64], xp: &[f64]) -> f64 {
        x.iter().zip(xp).map(|(a, b)| a * b).sum()
    }

    /// A dual unit vector `x'` with `⟨x, x'⟩ = ‖x‖`.
    ///
    /// For `r = ∞` the maximizing coordinate is the lowest index attaining
    /// the max, so the output is deterministic under ties.
    pub fn norming_functional(&self, x: &[f64]) -> Result<DualPoint> {
        self.check_dim(x)?;
        let n = self.norm(x)?;
        if n == 0.0 {
            return Err(Error::InvalidInput("norming functional of the zero vector".into()));
        }
        let coords = match self.r {
            Exponent::Finite(r) if r == 1.0 => self
                .weights
                .iter()
                .zip(x)
                .map(|(&w, &xi)| w * sign(xi))
                .collect(),
            Exponent::Finite(r) => {
                // x'ᵢ = wᵢ sign(xᵢ) |xᵢ|^(r-1) / ‖x‖^(r-1), computed against
                // the max-scaled coordinates for stability.
                let m = x.iter().map(|v| v.abs()).fold(0.0_f64, f64::max);
                let scale = n / m;
                self.weights
                    .iter()
                    .zip(x)
                    .map(|(&w, &xi)| w * sign(xi) * (xi.abs() / m).powf(r - 1.0) / scale.powf(r - 1.0))
                    .collect()
            }
            Exponent::Infinity => {
                let mut best = 0usize;
                let mut best_val = f64::NEG_INFINITY;
                for (i, (&w, &xi)) in self.weights.iter().zip(x).enumerate() {
                    let v = w * xi.abs();
                    if v > best_val {
                        best_val = v;
                        best = i;
                    }
                }
                let mut coords = vec![0.0; self.dim];
                coords[best] = sign(x[best]) * self.weights[best];
                coords
            }
        };
        Ok(DualPoint { coordinates: coords, host: self.dual() })
    }

    /// Radial retraction onto the unit ball: identity inside, `x/‖x‖` outside.
    pub fn retract_to_ball(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.norm(x)?;
        if n <= 1.0 {
            Ok(x.to_vec())
        } else {
            Ok(x.iter().map(|v| v / n).collect())
        }
    }
}

fn sign(t: f64) -> f64 {
    if t > 0.0 {
        1.0
    } else if t < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// A point of a dual unit ball, tagged with the dual space it lives in.
#[derive(Debug, Clone, Serialize)]
pub struct DualPoint {
    pub coordinates: Vec<f64>,
    pub host: NormedSpace,
}

impl DualPoint {
    /// Feasibility slack for membership in the host unit ball.
    pub const BALL_SLACK: f64 = 1e-12;

    pub fn new(coordinates: Vec<f64>, host: NormedSpace) -> Result<Self> {
        let n = host.norm(&coordinates)?;
        if n > 1.0 + Self::BALL_SLACK {
            return Err(Error::InvalidInput(format!(
                "dual point has norm {n}, outside the unit ball"
            )));
        }
        Ok(DualPoint { coordinates, host })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rel_err;
    use proptest::prelude::*;

    #[test]
    fn euclidean_norm_of_3_4_is_5() {
        let s = NormedSpace::l(2.0, 2);
        assert_eq!(s.norm(&[3.0, 4.0]).unwrap(), 5.0);
        assert_eq!(s.norm(&[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn l1_norm_sums_absolute_values() {
        let s = NormedSpace::l(1.0, 3);
        assert_eq!(s.norm(&[1.0, -1.0, 1.0]).unwrap(), 3.0);
    }

    #[test]
    fn norm_rejects_dimension_mismatch() {
        let s = NormedSpace::l(2.0, 2);
        assert!(matches!(
            s.norm(&[1.0, 2.0, 3.0]),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn duals_of_standard_spaces() {
        assert_eq!(NormedSpace::l(2.0, 3).dual(), NormedSpace::l(2.0, 3));
        assert_eq!(NormedSpace::l(1.0, 4).dual(), NormedSpace::l_inf(4));
        let d = NormedSpace::l(4.0, 2).dual();
        assert!((d.exponent().as_finite().unwrap() - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn dual_is_an_involution_with_weights() {
        let s = NormedSpace::weighted(3, Exponent::Finite(3.0), vec![0.5, 2.0, 7.0]).unwrap();
        let dd = s.dual().dual();
        assert_eq!(dd.exponent(), s.exponent());
        for (a, b) in dd.weights().iter().zip(s.weights()) {
            assert!(rel_err(*a, *b) < 1e-14);
        }
    }

    #[test]
    fn norming_functional_examples() {
        let s = NormedSpace::l(2.0, 2);
        let f = s.norming_functional(&[3.0, 4.0]).unwrap();
        assert!(rel_err(f.coordinates[0], 0.6) < 1e-15);
        assert!(rel_err(f.coordinates[1], 0.8) < 1e-15);
        assert!(rel_err(s.pairing(&[3.0, 4.0], &f.coordinates), 5.0) < 1e-15);

        let s1 = NormedSpace::l(1.0, 2);
        let f1 = s1.norming_functional(&[2.0, -5.0]).unwrap();
        assert_eq!(f1.coordinates, vec![1.0, -1.0]);
        assert_eq!(s1.pairing(&[2.0, -5.0], &f1.coordinates), 7.0);

        let si = NormedSpace::l_inf(2);
        let fi = si.norming_functional(&[2.0, 2.0]).unwrap();
        assert_eq!(fi.coordinates, vec![1.0, 0.0]);
        assert_eq!(si.pairing(&[2.0, 2.0], &fi.coordinates), 2.0);
    }

    #[test]
    fn norming_functional_rejects_zero() {
        let s = NormedSpace::l(2.0, 2);
        assert!(matches!(s.norming_functional(&[0.0, 0.0]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn retraction_examples() {
        let s = NormedSpace::l(2.0, 2);
        assert_eq!(s.retract_to_ball(&[3.0, 4.0]).unwrap(), vec![0.6, 0.8]);
        let s1 = NormedSpace::l(1.0, 2);
        assert_eq!(s1.retract_to_ball(&[0.2, 0.3]).unwrap(), vec![0.2, 0.3]);
        assert_eq!(s1.retract_to_ball(&[0.0, 0.0]).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn exponent_serde_accepts_inf_string() {
        let e: Exponent = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(e, Exponent::Infinity);
        let e: Exponent = serde_json::from_str("2.5").unwrap();
        assert_eq!(e, Exponent::Finite(2.5));
        assert_eq!(serde_json::to_string(&Exponent::Infinity).unwrap(), "\"inf\"");
    }

    #[test]
    fn space_serde_round_trip() {
        let s: NormedSpace =
            serde_json::from_str(r#"{"dim": 2, "r": "inf", "weights": [1.0, 2.0]}"#).unwrap();
        assert_eq!(s, NormedSpace::weighted(2, Exponent::Infinity, vec![1.0, 2.0]).unwrap());
        // weights default to ones
        let s: NormedSpace = serde_json::from_str(r#"{"dim": 3, "r": 1}"#).unwrap();
        assert_eq!(s, NormedSpace::l(1.0, 3));
        // invalid weights are rejected at parse time
        assert!(serde_json::from_str::<NormedSpace>(r#"{"dim": 2, "r": 2, "weights": [1.0, 0.0]}"#)
            .is_err());
    }

    fn arb_space() -> impl Strategy<Value = NormedSpace> {
        let exps = prop_oneof![
            Just(Exponent::Finite(1.0)),
            Just(Exponent::Finite(2.0)),
            Just(Exponent::Finite(1.5)),
            Just(Exponent::Finite(4.0)),
            Just(Exponent::Infinity),
        ];
        (1usize..5, exps).prop_flat_map(|(dim, r)| {
            proptest::collection::vec(0.25f64..4.0, dim)
                .prop_map(move |w| NormedSpace::weighted(dim, r, w).unwrap())
        })
    }

    fn arb_vec(dim: usize) -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(-10.0f64..10.0, dim)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn norm_axioms((s, x, y, alpha) in arb_space().prop_flat_map(|s| {
            let d = s.dim();
            (Just(s), arb_vec(d), arb_vec(d), -5.0f64..5.0)
        })) {
            let nx = s.norm(&x).unwrap();
            let ny = s.norm(&y).unwrap();
            // homogeneity
            let ax: Vec<f64> = x.iter().map(|v| alpha * v).collect();
            prop_assert!((s.norm(&ax).unwrap() - alpha.abs() * nx).abs() <= 1e-12 * (1.0 + nx));
            // triangle inequality
            let xy: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            prop_assert!(s.norm(&xy).unwrap() <= nx + ny + 1e-12 * (1.0 + nx + ny));
            // definiteness
            prop_assert!((nx == 0.0) == x.iter().all(|&v| v == 0.0));
        }

        #[test]
        fn norming_functional_is_tight((s, x) in arb_space().prop_flat_map(|s| {
            let d = s.dim();
            (Just(s), arb_vec(d).prop_filter("nonzero", |v| v.iter().any(|&t| t.abs() > 1e-3)))
        })) {
            let n = s.norm(&x).unwrap();
            let f = s.norming_functional(&x).unwrap();
            prop_assert!(rel_err(s.pairing(&x, &f.coordinates), n) < 1e-12);
            prop_assert!((f.host.norm(&f.coordinates).unwrap() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn hoelder_inequality((s, x, xp) in arb_space().prop_flat_map(|s| {
            let d = s.dim();
            (Just(s), arb_vec(d), arb_vec(d))
        })) {
            let dual = s.dual();
            let xp = dual.retract_to_ball(&xp).unwrap();
            prop_assert!(s.pairing(&x, &xp).abs() <= s.norm(&x).unwrap() + 1e-12);
        }

        #[test]
        fn retraction_is_feasible_and_idempotent((s, x) in arb_space().prop_flat_map(|s| {
            let d = s.dim();
            (Just(s), arb_vec(d))
        })) {
            let r = s.retract_to_ball(&x).unwrap();
            prop_assert!(s.norm(&r).unwrap() <= 1.0 + 1e-12);
            let rr = s.retract_to_ball(&r).unwrap();
            for (a, b) in rr.iter().zip(&r) {
                prop_assert!((a - b).abs() <= 1e-12);
            }
        }

        #[test]
        fn exponent_monotonicity_at_unit_weights((dim, x, lo, hi) in (1usize..5)
            .prop_flat_map(|d| (Just(d), arb_vec(d), 1.0f64..6.0, 0.0f64..6.0)))
        {
            let r = lo;
            let s_exp = lo + hi;
            let nr = NormedSpace::l(r, dim).norm(&x).unwrap();
            let ns = NormedSpace::l(s_exp, dim).norm(&x).unwrap();
            prop_assert!(ns <= nr + 1e-10 * (1.0 + nr));
            let ninf = NormedSpace::l_inf(dim).norm(&x).unwrap();
            prop_assert!(ninf <= ns + 1e-10 * (1.0 + ns));
        }
    }
}
