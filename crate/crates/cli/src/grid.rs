use std::fmt;
use std::str::FromStr;

/// Sample points `a:b:n` (uniform, endpoints included) or `log:a:b:n`
/// (geometric, `0 < a < b`).
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
    pub log: bool,
}

impl Grid {
    pub fn linear(lo: f64, hi: f64, n: usize) -> Self {
        Grid { lo, hi, n, log: false }
    }

    pub fn geometric(lo: f64, hi: f64, n: usize) -> Self {
        Grid { lo, hi, n, log: true }
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.n - 1) as f64;
        (0..self.n)
            .map(|i| {
                let s = i as f64 / last;
                if i + 1 == self.n {
                    self.hi
                } else if self.log {
                    self.lo * (self.hi / self.lo).powf(s)
                } else {
                    self.lo + (self.hi - self.lo) * s
                }
            })
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log {
            write!(f, "log:")?;
        }
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (log, body) = match s.strip_prefix("log:") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let parts: Vec<&str> = body.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid `{s}` is not of the form a:b:n"));
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| format!("bad grid start `{}`", parts[0]))?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| format!("bad grid end `{}`", parts[1]))?;
        let n: usize = parts[2].trim().parse().map_err(|_| format!("bad grid count `{}`", parts[2]))?;
        if !lo.is_finite() || !hi.is_finite() {
            return Err(format!("grid `{s}` has a non-finite end point"));
        }
        if n < 2 {
            return Err(format!("grid `{s}` needs at least 2 points"));
        }
        if log && !(lo > 0.0 && hi > lo) {
            return Err(format!("geometric grid `{s}` needs 0 < a < b"));
        }
        Ok(Grid { lo, hi, n, log })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_samples() {
        let g: Grid = "0:1:5".parse().unwrap();
        assert_eq!(g.points(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let g: Grid = "log:1:1e4:5".parse().unwrap();
        let p = g.points();
        assert!((p[2] - 100.0).abs() < 1e-9);
        assert_eq!(p[4], 1e4);
        assert_eq!(g.to_string(), "log:1:10000:5");
    }

    #[test]
    fn rejects_bad_specs() {
        assert!("0:1:1".parse::<Grid>().is_err());
        assert!("0:1".parse::<Grid>().is_err());
        assert!("log:0:1:4".parse::<Grid>().is_err());
        assert!("0:inf:4".parse::<Grid>().is_err());
    }
}
