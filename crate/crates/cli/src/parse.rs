//! Parsers for flag values.

use fusion_forge::weyl_lattice::Weight;
use fusion_forge::C64;

/// `RE`, `RE+IMi`, `RE-IMi` or `IMi`.
pub fn parse_kappa(s: &str) -> Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot read κ from {s:?}; expected RE[+IMi]");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let im_of = |x: &str| -> Result<f64, String> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => x.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(j) => Ok(C64::new(body[..j].parse::<f64>().map_err(|_| bad())?, im_of(&body[j..])?)),
        None => Ok(C64::new(0.0, im_of(body)?)),
    }
}

fn doubled(x: &str) -> Result<i64, String> {
    if let Some(num) = x.strip_suffix("/2") {
        return num.parse::<i64>().map_err(|_| format!("bad coordinate {x:?}"));
    }
    x.parse::<i64>().map(|v| 2 * v).map_err(|_| format!("bad coordinate {x:?}"))
}

/// `box`, `spin+`, `spin-`, `0`, or comma-separated coordinates such as `1,1,0`
/// or `1/2,1/2,-1/2`.
pub fn parse_generator(s: &str, n: usize) -> Result<Weight, String> {
    match s {
        "box" | "v" => return Ok(Weight::vector(n)),
        "spin+" | "s+" => return Ok(Weight::spin_plus(n)),
        "spin-" | "s-" => return Ok(Weight::spin_minus(n)),
        "0" => return Ok(Weight::zero(n)),
        _ => {}
    }
    let coords = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|x| doubled(x.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != n {
        return Err(format!("weight {s:?} has {} coordinates, expected {n}", coords.len()));
    }
    Weight::new(coords).map_err(|e| e.to_string())
}

/// `NAME=VALUE` with a positive value.
pub fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got {s:?}"))?;
    let v: f64 = value.parse().map_err(|_| format!("bad tolerance value {value:?}"))?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(format!("tolerance {name} must be positive"));
    }
    Ok((name.to_string(), v))
}

pub fn parse_rank(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("bad rank {s:?}"))?;
    if n < 3 {
        return Err(format!("rank must be at least 3, got {n}"));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_forms() {
        assert_eq!(parse_kappa("-6+4i").unwrap(), C64::new(-6.0, 4.0));
        assert_eq!(parse_kappa("9").unwrap(), C64::new(9.0, 0.0));
        assert_eq!(parse_kappa("-7.5-5i").unwrap(), C64::new(-7.5, -5.0));
        assert_eq!(parse_kappa("2.5i").unwrap(), C64::new(0.0, 2.5));
        assert_eq!(parse_kappa("1e1-1e-1i").unwrap(), C64::new(10.0, -0.1));
        assert_eq!(parse_kappa("3-i").unwrap(), C64::new(3.0, -1.0));
        assert!(parse_kappa("x").is_err());
        assert!(parse_kappa("").is_err());
    }

    #[test]
    fn generators() {
        assert_eq!(parse_generator("box", 4).unwrap(), Weight::vector(4));
        assert_eq!(parse_generator("1/2,1/2,-1/2", 3).unwrap(), Weight::spin_minus(3));
        assert_eq!(parse_generator("(2,0,0)", 3).unwrap(), Weight::theta(3, 1, 2));
        assert!(parse_generator("1,1/2,0", 3).is_err());
        assert!(parse_generator("1,0", 3).is_err());
    }

    #[test]
    fn tolerances() {
        assert_eq!(parse_tol("residual=1e-6").unwrap(), ("residual".into(), 1e-6));
        assert!(parse_tol("residual=0").is_err());
        assert!(parse_tol("residual").is_err());
    }
}
