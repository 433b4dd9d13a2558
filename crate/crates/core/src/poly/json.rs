use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Alphabet, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<i64>,
}

/// Wire format: variable names plus terms in canonical order, coefficients
/// as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl LaurentPoly {
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            vars: self.alphabet().names().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|(e, c)| TermJson { c: c.to_string(), e: e.iter().map(|&x| x as i64).collect() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial serializes")
    }

    pub fn from_json_value(p: &PolyJson) -> Result<Self> {
        let alpha = Alphabet::new(p.vars.iter().cloned());
        let mut terms = Vec::with_capacity(p.terms.len());
        for t in &p.terms {
            if t.e.len() != p.vars.len() {
                return Err(Error::Parse(format!("term has {} exponents, expected {}", t.e.len(), p.vars.len())));
            }
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            let e = t
                .e
                .iter()
                .map(|&x| i32::try_from(x).map_err(|_| Error::Parse(format!("exponent {x} out of range"))))
                .collect::<Result<Vec<_>>>()?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(&alpha, terms))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let p: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&p)
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::{case2, LaurentPoly, Std};

    #[test]
    fn round_trip_is_bit_exact() {
        let p = case2();
        let s = p.to_json();
        let q = LaurentPoly::from_json(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_json(), s);
    }

    #[test]
    fn shape() {
        let s = Std::new(1);
        let j = s.free(1).to_json();
        assert_eq!(
            j,
            r#"{"vars":["u","v","w","X1"],"terms":[{"c":"1","e":[1,0,0,1]},{"c":"1","e":[0,0,1,0]},{"c":"1","e":[0,1,0,-1]}]}"#
        );
    }

    #[test]
    fn bad_input() {
        assert!(LaurentPoly::from_json(r#"{"vars":["x"],"terms":[{"c":"x","e":[1]}]}"#).is_err());
        assert!(LaurentPoly::from_json(r#"{"vars":["x"],"terms":[{"c":"1","e":[1,2]}]}"#).is_err());
    }
}
