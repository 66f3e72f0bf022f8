use num_complex::Complex64;

use crate::{Error, Result};

/// Inclusive rectangular grid. Points are ordered row-major with the
/// imaginary part in the outer loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub n_re: usize,
    pub n_im: usize,
}

impl GridSpec {
    pub fn new(re: (f64, f64), im: (f64, f64), n_re: usize, n_im: usize) -> Result<Self> {
        let g = Self { re_min: re.0, re_max: re.1, im_min: im.0, im_max: im.1, n_re, n_im };
        g.validate()?;
        Ok(g)
    }

    /// The 241×241 grid on the square (−6, 6)×(−6, 6)i.
    pub fn inset() -> Self {
        Self { re_min: -6.0, re_max: 6.0, im_min: -6.0, im_max: 6.0, n_re: 241, n_im: 241 }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.re_min, self.re_max, self.im_min, self.im_max].iter().all(|v| v.is_finite());
        if !finite || self.re_min > self.re_max || self.im_min > self.im_max {
            return Err(Error::Scheme(format!("invalid grid bounds {self:?}")));
        }
        if self.n_re == 0 || self.n_im == 0 {
            return Err(Error::Scheme("grid sizes must be at least 1".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n_re * self.n_im
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Complex64> {
        let res = axis(self.re_min, self.re_max, self.n_re);
        let ims = axis(self.im_min, self.im_max, self.n_im);
        ims.iter()
            .flat_map(|&y| res.iter().map(move |&x| Complex64::new(x, y)))
            .collect()
    }
}

// The fixture generator uses the same expression and operation order, so the
// coordinates agree bit for bit.
fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * (i as f64) / ((n - 1) as f64)).collect()
}
