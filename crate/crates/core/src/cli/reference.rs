//! Reference fixtures: CSV with header `z_re,z_im,w_re,w_im`, the argument as
//! a round-trip binary64 decimal and the value with at least 30 significant
//! digits.

use std::collections::HashMap;
use std::io::Read;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub const HEADER: [&str; 4] = ["z_re", "z_im", "w_re", "w_im"];

/// A decimal reference value carried as an unevaluated sum `hi + lo` of two
/// binary64 numbers, so errors well below one ulp remain measurable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extended {
    pub hi: f64,
    pub lo: f64,
}

impl Extended {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let hi: f64 = s.parse().map_err(|e| format!("bad number `{s}`: {e}"))?;
        if !hi.is_finite() || hi == 0.0 {
            return Ok(Self { hi, lo: 0.0 });
        }
        let exact = parse_decimal(s).ok_or_else(|| format!("bad decimal `{s}`"))?;
        let rounded = BigRational::from_float(hi).expect("finite float");
        let lo = (exact - rounded).to_f64().unwrap_or(0.0);
        Ok(Self { hi, lo })
    }

    /// `x − self`, exact in the leading part when `x` is close to `hi`.
    #[inline]
    pub fn diff_from(&self, x: f64) -> f64 {
        (x - self.hi) - self.lo
    }
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits: String = [int_part, frac_part].concat();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut n: BigInt = digits.parse().ok()?;
    if negative {
        n = -n;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-scale) as usize))
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRecord {
    pub z: Complex64,
    pub re: Extended,
    pub im: Extended,
}

impl ReferenceRecord {
    /// Reference value exceeds the binary64 range.
    pub fn overflows(&self) -> bool {
        !self.re.hi.is_finite() || !self.im.hi.is_finite()
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.hi, self.im.hi)
    }

    /// `|computed − reference| / |reference|` in complex modulus; NaN when the
    /// reference is not representable.
    pub fn relative_error(&self, computed: Complex64) -> f64 {
        if self.overflows() {
            return f64::NAN;
        }
        let dr = self.re.diff_from(computed.re);
        let di = self.im.diff_from(computed.im);
        let scale = self.re.hi.hypot(self.im.hi);
        let err = dr.hypot(di);
        if err == 0.0 {
            0.0
        } else {
            err / scale
        }
    }
}

/// Reference rows keyed by the bit pattern of the argument.
#[derive(Debug, Clone, Default)]
pub struct ReferenceSet {
    rows: Vec<ReferenceRecord>,
    index: HashMap<(u64, u64), usize>,
}

fn key(z: Complex64) -> (u64, u64) {
    // -0.0 and 0.0 denote the same grid point
    ((z.re + 0.0).to_bits(), (z.im + 0.0).to_bits())
}

impl ReferenceSet {
    pub fn read<R: Read>(reader: R) -> Result<Self, String> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
        let headers = rdr.headers().map_err(|e| e.to_string())?.clone();
        if headers.iter().collect::<Vec<_>>() != HEADER {
            return Err(format!("unexpected header {:?}, expected {:?}", headers, HEADER));
        }
        let mut set = Self::default();
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| e.to_string())?;
            let field = |i: usize| rec.get(i).ok_or_else(|| format!("row {}: missing field {i}", line + 2));
            let z_re: f64 = field(0)?.parse().map_err(|e| format!("row {}: {e}", line + 2))?;
            let z_im: f64 = field(1)?.parse().map_err(|e| format!("row {}: {e}", line + 2))?;
            if !z_re.is_finite() || !z_im.is_finite() {
                return Err(format!("row {}: non-finite argument", line + 2));
            }
            let row = ReferenceRecord {
                z: Complex64::new(z_re, z_im),
                re: Extended::parse(field(2)?)?,
                im: Extended::parse(field(3)?)?,
            };
            set.insert(row);
        }
        Ok(set)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, String> {
        let f = std::fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::read(std::io::BufReader::new(f))
    }

    pub fn insert(&mut self, row: ReferenceRecord) {
        self.index.insert(key(row.z), self.rows.len());
        self.rows.push(row);
    }

    pub fn get(&self, z: Complex64) -> Option<&ReferenceRecord> {
        self.index.get(&key(z)).map(|&i| &self.rows[i])
    }

    pub fn rows(&self) -> &[ReferenceRecord] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}
