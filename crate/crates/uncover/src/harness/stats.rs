use serde::{Deserialize, Serialize};

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959_963_984_540_054;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    /// Unbiased sample variance; 0 for a single sample.
    pub variance: f64,
    pub std_error: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

/// Mean, variance and normal-approximation 95% interval; `None` for no samples.
pub fn summarize(xs: &[f64]) -> Option<Summary> {
    let n = xs.len();
    if n == 0 {
        return None;
    }
    let mean = xs.iter().sum::<f64>() / n as f64;
    let variance = if n > 1 { xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64 } else { 0.0 };
    let std_error = (variance / n as f64).sqrt();
    Some(Summary { n, mean, variance, std_error, ci_lo: mean - Z95 * std_error, ci_hi: mean + Z95 * std_error })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_sample() {
        let s = summarize(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(s.mean, 2.5);
        assert!((s.variance - 5.0 / 3.0).abs() < 1e-12);
        assert!(s.ci_lo < 2.5 && s.ci_hi > 2.5);
        assert!(summarize(&[]).is_none());
        assert_eq!(summarize(&[7.0]).unwrap().variance, 0.0);
    }
}
