use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::unit_sphere_volume;

/// `a_n`, `p_n`, `V_n` and `Y_n = n(n-1) V_n^{2/n}` for one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YamabeConstants {
    pub n: usize,
    pub a_n: f64,
    /// `a_n` as a reduced fraction, e.g. `"8"` or `"16/3"`.
    pub a_n_exact: String,
    pub p_n: f64,
    pub p_n_exact: String,
    #[serde(rename = "V_n")]
    pub v_n: f64,
    #[serde(rename = "Y_n")]
    pub y_n: f64,
}

fn fraction(num: u64, den: u64) -> String {
    let g = num.gcd(&den);
    let (a, b) = (num / g, den / g);
    if b == 1 {
        a.to_string()
    } else {
        format!("{a}/{b}")
    }
}

pub fn yamabe_constants(n: usize) -> Result<YamabeConstants> {
    if n < 3 {
        return Err(Error::domain(format!(
            "the Yamabe functional needs n >= 3, got {n}"
        )));
    }
    let nn = n as u64;
    let v_n = unit_sphere_volume(n);
    let nf = n as f64;
    Ok(YamabeConstants {
        n,
        a_n: 4.0 * (nf - 1.0) / (nf - 2.0),
        a_n_exact: fraction(4 * (nn - 1), nn - 2),
        p_n: 2.0 * nf / (nf - 2.0),
        p_n_exact: fraction(2 * nn, nn - 2),
        v_n,
        y_n: nf * (nf - 1.0) * v_n.powf(2.0 / nf),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn low_dimensions() {
        let c3 = yamabe_constants(3).unwrap();
        assert_eq!((c3.a_n, c3.p_n), (8.0, 6.0));
        assert_eq!((c3.a_n_exact.as_str(), c3.p_n_exact.as_str()), ("8", "6"));
        let c4 = yamabe_constants(4).unwrap();
        assert_eq!((c4.a_n, c4.p_n), (6.0, 4.0));
        assert!((c4.y_n - 12.0 * (8.0 * PI * PI / 3.0).sqrt()).abs() < 1e-8);
        let c5 = yamabe_constants(5).unwrap();
        assert!((c5.y_n - 20.0 * PI.powf(1.2)).abs() < 1e-8);
        assert_eq!(c5.a_n_exact, "16/3");
        assert_eq!(c5.p_n_exact, "10/3");
        assert!(matches!(yamabe_constants(2), Err(Error::Domain(_))));
    }
}
