//! Machining tolerances for cubic arcs: tendencies, chord deviation, extrapolated
//! tendencies, normal and geodesic deviations, groove width and budget checks.

use crate::error::{Error, Result};

/// Distances `d0`, `d1` from the tangent intersections to the far chord ordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TendencyPair {
    pub d0: f64,
    pub d1: f64,
}

impl TendencyPair {
    pub fn new(d0: f64, d1: f64) -> Self {
        Self { d0, d1 }
    }

    /// `d0^2 - d0 d1 + d1^2`, never negative.
    pub fn delta(&self) -> f64 {
        self.d0 * self.d0 - self.d0 * self.d1 + self.d1 * self.d1
    }

    /// Signed distance of the cubic arc from its chord at parameter `u` in `[0, 1]`.
    pub fn deviation_at(&self, u: f64) -> f64 {
        u * (1.0 - u) * (self.d0 * (1.0 - u) + self.d1 * u)
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(self.d0 * k, self.d1 * k)
    }
}

/// Denominator used in the maximum-deviation closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// `|d0 + d1| + 2 sqrt(D)`: the exact maximum of the chord deviation.
    #[default]
    Exact,
    /// `|d0 - d1| + 2 sqrt(D)`.
    DiffTwoRoot,
    /// `|d0 + d1| + sqrt(D)`.
    SumRoot,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Variant::Exact),
            "diff-two-root" => Ok(Variant::DiffTwoRoot),
            "sum-root" => Ok(Variant::SumRoot),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

fn closed_form(t: &TendencyPair, variant: Variant) -> f64 {
    let delta = t.delta();
    if delta == 0.0 {
        return 0.0;
    }
    let root = delta.sqrt();
    let sum = (t.d0 + t.d1).abs();
    let den = match variant {
        Variant::Exact => sum + 2.0 * root,
        Variant::DiffTwoRoot => (t.d0 - t.d1).abs() + 2.0 * root,
        Variant::SumRoot => sum + root,
    };
    (sum + delta / den) / 9.0
}

/// Maximum distance of the arc from its chord.
pub fn max_deviation(t: &TendencyPair) -> f64 {
    max_deviation_with(t, Variant::Exact)
}

pub fn max_deviation_with(t: &TendencyPair, variant: Variant) -> f64 {
    closed_form(t, variant)
}

/// Tendencies after stretching the arc to `x0 + rho (x1 - x0)`.
pub fn extrapolate_tendencies(t: &TendencyPair, rho: f64) -> TendencyPair {
    let diff = t.d0 - t.d1;
    let r2 = rho * rho;
    TendencyPair::new(r2 * (t.d0 + (1.0 - rho) * diff), r2 * (t.d1 + 2.0 * (1.0 - rho) * diff))
}

/// `E_N = (|d0+d1| + D / (|d0+d1| + sqrt D)) / 9`.
pub fn normal_deviation(t: &TendencyPair) -> f64 {
    closed_form(t, Variant::SumRoot)
}

/// `E_G = h_m^2 / (2R)`, `h_m` the normal functional of the geodesic tendencies.
pub fn geodesic_deviation(t: &TendencyPair, radius: f64) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::Domain(format!("cutter radius must be positive, got {radius}")));
    }
    let h = normal_deviation(t);
    Ok(h * h / (2.0 * radius))
}

/// Distance between adjacent grooves, `2 sqrt(2 e E_S / (e g - f^2))`.
pub fn groove_width(e: f64, f: f64, g: f64, scallop: f64) -> Result<f64> {
    let det = e * g - f * f;
    if !(det > 0.0 && e > 0.0) {
        return Err(Error::Domain("first fundamental form is not positive definite".into()));
    }
    if !(scallop > 0.0) {
        return Err(Error::Domain("scallop height must be positive".into()));
    }
    Ok(2.0 * (2.0 * e * scallop / det).sqrt())
}

/// Normal, geodesic and between-groove allowances with cutter radius and total budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceBudget {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub radius: f64,
    pub total: f64,
}

impl ToleranceBudget {
    pub fn new(t1: f64, t2: f64, t3: f64, radius: f64, total: f64) -> Result<Self> {
        if [t1, t2, t3, radius, total].iter().any(|v| !(*v > 0.0)) {
            return Err(Error::Domain("budget entries must be positive".into()));
        }
        Ok(Self { t1, t2, t3, radius, total })
    }

    /// Checks normal and geodesic deviations against their own limits and the total.
    pub fn admits(&self, normal: &TendencyPair, geodesic: &TendencyPair) -> Result<bool> {
        let en = normal_deviation(normal);
        let eg = geodesic_deviation(geodesic, self.radius)?;
        Ok(en <= self.t1 && eg <= self.t2 && budget_ok(en, eg, self.total))
    }
}

pub fn budget_ok(e_n: f64, e_g: f64, total: f64) -> bool {
    e_n + e_g <= total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_tendencies() {
        let t = TendencyPair::new(0.0, 0.0);
        assert_eq!(max_deviation(&t), 0.0);
        assert_eq!(normal_deviation(&t), 0.0);
        assert_eq!(geodesic_deviation(&t, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn symmetric_cases() {
        // f(u) = d u (1-u): peak d/4 at 1/2
        let d = 1.7;
        assert!((max_deviation(&TendencyPair::new(d, d)) - d / 4.0).abs() < 1e-15);
        // f(u) = d u (1-u)^2: peak 4d/27 at 1/3
        assert!((max_deviation(&TendencyPair::new(d, 0.0)) - 4.0 * d / 27.0).abs() < 1e-15);
        // f(u) = d u (1-u)(1-2u): peak sqrt(3) d / 18
        assert!((max_deviation(&TendencyPair::new(d, -d)) - 3f64.sqrt() * d / 18.0).abs() < 1e-15);
    }

    #[test]
    fn extrapolation() {
        let t = TendencyPair::new(1.0, 2.0);
        assert_eq!(extrapolate_tendencies(&t, 1.0), t);
        assert_eq!(extrapolate_tendencies(&t, 0.0), TendencyPair::new(0.0, 0.0));
        assert_eq!(extrapolate_tendencies(&t, 2.0), TendencyPair::new(8.0, 16.0));
    }

    #[test]
    fn normal_and_geodesic() {
        let d = 2.4;
        assert!((normal_deviation(&TendencyPair::new(d, 0.0)) - d / 6.0).abs() < 1e-15);
        let g = TendencyPair::new(3.0, 3.0);
        assert!((normal_deviation(&g) - 7.0 / 9.0).abs() < 1e-15);
        let eg = geodesic_deviation(&g, 100.0).unwrap();
        assert!((eg - 49.0 / 81.0 / 200.0).abs() < 1e-17);
        assert!(geodesic_deviation(&g, 0.0).is_err());
    }

    #[test]
    fn grooves() {
        assert_eq!(groove_width(1.0, 0.0, 1.0, 0.5).unwrap(), 2.0);
        // 2 sqrt(2 * 4 * (1/8) / 4) = 2 sqrt(1/4) = 1
        assert_eq!(groove_width(4.0, 0.0, 1.0, 0.125).unwrap(), 1.0);
        assert!(groove_width(1.0, 1.0, 1.0, 0.5).is_err());
        assert!(groove_width(1.0, 2.0, 1.0, 0.5).is_err());
    }

    #[test]
    fn budget() {
        assert!(budget_ok(0.0, 0.0, 0.1));
        assert!(budget_ok(0.05, 0.05, 0.1));
        assert!(!budget_ok(0.1, 1e-9, 0.1));
        let b = ToleranceBudget::new(0.1, 0.1, 0.1, 5.0, 0.15).unwrap();
        assert!(b.admits(&TendencyPair::new(0.1, 0.1), &TendencyPair::new(0.1, 0.1)).unwrap());
        assert!(ToleranceBudget::new(0.1, 0.0, 0.1, 5.0, 0.15).is_err());
    }

    #[test]
    fn variants_parse() {
        assert_eq!("diff-two-root".parse::<Variant>().unwrap(), Variant::DiffTwoRoot);
        assert!("other".parse::<Variant>().is_err());
    }
}
