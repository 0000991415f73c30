//! Simultaneous approximation of all complex roots (Aberth–Ehrlich).

use num_complex::Complex;
use num_traits::Float;

fn horner<F: Float>(coeffs: &[F], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::new(F::zero(), F::zero());
    let mut dp = p;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex::new(c, F::zero());
    }
    (p, dp)
}

/// All roots of `Σ coeffs[i]·z^i`, or `None` if the iteration does not settle
/// within `max_iter` sweeps. The leading coefficient must be nonzero.
pub fn aberth<F: Float>(coeffs: &[F], max_iter: usize, tol: F) -> Option<Vec<Complex<F>>> {
    let n = coeffs.len().checked_sub(1)?;
    let lc = *coeffs.last()?;
    if n == 0 || lc.is_zero() {
        return Some(Vec::new());
    }
    let monic: Vec<F> = coeffs.iter().map(|&c| c / lc).collect();
    let radius = F::one() + monic[..n].iter().fold(F::zero(), |m, c| m.max(c.abs()));
    let nf = F::from(n)?;
    let two_pi = F::from(std::f64::consts::TAU)?;
    let offset = F::from(0.4)?;
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|i| {
            let theta = two_pi * F::from(i)? / nf + offset;
            Some(Complex::from_polar(radius * F::from(0.5)?, theta))
        })
        .collect::<Option<_>>()?;

    for _ in 0..max_iter {
        let mut worst = F::zero();
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == F::zero() {
                continue;
            }
            let ratio = p / dp;
            let sum = (0..n)
                .filter(|&j| j != i)
                .fold(Complex::new(F::zero(), F::zero()), |acc, j| acc + (z[i] - z[j]).inv());
            let step = ratio / (Complex::new(F::one(), F::zero()) - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            z[i] = z[i] - step;
            worst = worst.max(step.norm() / (F::one() + z[i].norm()));
        }
        if worst <= tol {
            return Some(z);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots() {
        // (z − 1)(z + 2)(z − 3) = z³ − 2z² − 5z + 6
        let mut roots = aberth(&[6.0, -5.0, -2.0, 1.0], 200, 1e-14).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (r, want) in roots.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((r.re - want).abs() < 1e-10 && r.im.abs() < 1e-10);
        }
    }

    #[test]
    fn complex_pair() {
        let roots = aberth(&[1.0f64, 0.0, 1.0], 200, 1e-14).unwrap();
        assert!(roots.iter().all(|r| r.re.abs() < 1e-10 && (r.im.abs() - 1.0).abs() < 1e-10));
    }

    #[test]
    fn single_precision() {
        let roots = aberth(&[-2.0f32, 0.0, 1.0], 200, 1e-6).unwrap();
        assert!(roots.iter().any(|r| (r.re - 2.0f32.sqrt()).abs() < 1e-4));
    }
}
