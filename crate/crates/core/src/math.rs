//! Floating-point helpers routed through `libm` for platform-stable results.

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// Determinant of a row-major `n × n` matrix via Gaussian elimination with
/// partial pivoting. Destroys `a`.
pub(crate) fn det_in_place(a: &mut [f64], n: usize) -> f64 {
    debug_assert_eq!(a.len(), n * n);
    let mut det = 1.0;
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if abs(a[row * n + col]) > abs(a[pivot * n + col]) {
                pivot = row;
            }
        }
        let p = a[pivot * n + col];
        if p == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        det *= p;
        for row in col + 1..n {
            let factor = a[row * n + col] / p;
            if factor != 0.0 {
                for k in col..n {
                    a[row * n + k] -= factor * a[col * n + k];
                }
            }
        }
    }
    det
}

pub(crate) fn factorial(n: usize) -> f64 {
    let mut out = 1.0;
    for k in 2..=n {
        out *= k as f64;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small_matrices() {
        let mut a = [2.0];
        assert_eq!(det_in_place(&mut a, 1), 2.0);
        let mut b = [1.0, 2.0, 3.0, 4.0];
        assert!((det_in_place(&mut b, 2) - (-2.0)).abs() < 1e-14);
        // singular
        let mut c = [1.0, 2.0, 2.0, 4.0];
        assert_eq!(det_in_place(&mut c, 2), 0.0);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(1), 1.0);
        assert_eq!(factorial(4), 24.0);
    }
}
