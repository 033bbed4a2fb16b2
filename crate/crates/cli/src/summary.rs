//! Plain mean and sample standard error across seeds.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub mean: f64,
    /// `s / sqrt(k)` with the unbiased sample deviation; 0 for a single seed.
    pub stderr: f64,
}

impl Summary {
    pub fn of(xs: &[f64]) -> Self {
        let k = xs.len();
        if k == 0 {
            return Self {
                mean: 0.0,
                stderr: 0.0,
            };
        }
        let mean = xs.iter().sum::<f64>() / k as f64;
        if k < 2 {
            return Self { mean, stderr: 0.0 };
        }
        let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1) as f64;
        Self {
            mean,
            stderr: (var / k as f64).sqrt(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let s = Summary::of(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.mean, 2.5);
        assert!((s.stderr - (5.0f64 / 3.0 / 4.0).sqrt()).abs() < 1e-15);
        assert_eq!(
            Summary::of(&[0.7]),
            Summary {
                mean: 0.7,
                stderr: 0.0
            }
        );
        assert_eq!(Summary::of(&[]).mean, 0.0);
    }
}
