//! Moment sequences: named generators with a synchronized memo cache.
//!
//! A [`MomentSeq`] is a pure map `k -> Poly`; the cache only memoizes.
//! Sequence constructors compose: shifts, term-wise geometric scaling,
//! and the binomial transform all wrap a base sequence.

pub mod special;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rational::qrat;
use special::{bernoulli_poly, euler_poly, half_shift, qbinom};

/// Recipe for a moment sequence.
#[derive(Debug, Clone, PartialEq)]
pub enum SeqSpec {
    /// k -> B_k
    BernoulliNum,
    /// k -> E_k
    EulerNum,
    /// k -> B_k(x)
    BernoulliPoly,
    /// k -> E_k(x)
    EulerPoly,
    /// k -> B_{2k+1}((x+1)/2)
    BernoulliOddHalf,
    /// k -> E_{2k+nu}((x+1)/2)
    EulerNuHalf(usize),
    /// k -> B_{2k}((x+1)/2)
    BernoulliEvenHalf,
    /// k -> B_{2k}(1/2)
    BernoulliEvenCenter,
    /// k -> base(k + m)
    Shifted(Box<SeqSpec>, usize),
    /// k -> factor^k * base(k)
    Scaled(Box<SeqSpec>, Poly),
    /// k -> sum_j C(k, j) base(j) shift^{k-j}
    BinomialTransform(Box<SeqSpec>, Poly),
    /// Explicit finite prefix, for randomized suites.
    Table(Vec<Poly>),
}

impl SeqSpec {
    fn compute(&self, k: usize) -> Poly {
        match self {
            SeqSpec::BernoulliNum => Poly::constant(special::bernoulli_number(k)),
            SeqSpec::EulerNum => Poly::constant(special::euler_number(k)),
            SeqSpec::BernoulliPoly => bernoulli_poly(k),
            SeqSpec::EulerPoly => euler_poly(k),
            SeqSpec::BernoulliOddHalf => bernoulli_poly(2 * k + 1).compose(&half_shift()),
            SeqSpec::EulerNuHalf(nu) => euler_poly(2 * k + nu).compose(&half_shift()),
            SeqSpec::BernoulliEvenHalf => bernoulli_poly(2 * k).compose(&half_shift()),
            SeqSpec::BernoulliEvenCenter => Poly::constant(bernoulli_poly(2 * k).eval(&qrat(1, 2))),
            SeqSpec::Shifted(base, m) => base.compute(k + m),
            SeqSpec::Scaled(base, factor) => &factor.pow(k) * &base.compute(k),
            SeqSpec::BinomialTransform(base, shift) => {
                let mut acc = Poly::zero();
                for j in 0..=k {
                    let term = base.compute(j).scale(&qbinom(k, j));
                    acc = &acc + &(&term * &shift.pow(k - j));
                }
                acc
            }
            SeqSpec::Table(rows) => rows
                .get(k)
                .cloned()
                .unwrap_or_else(|| panic!("table-backed sequence has no term {k}")),
        }
    }

    /// The atoms addressable by bare name.
    pub fn known_names() -> Vec<&'static str> {
        vec![
            "bernoulli-num",
            "euler-num",
            "bernoulli-poly",
            "euler-poly",
            "bernoulli-odd-half",
            "euler-nu-half(<nu>)",
            "bernoulli-even-half",
            "bernoulli-even-center",
            "shifted(<seq>,<m>)",
            "scaled(<seq>,<poly>)",
            "binomial-transform(<seq>)",
        ]
    }

    /// Parses the CLI grammar, e.g. `shifted(bernoulli-odd-half,1)` or
    /// `scaled(bernoulli-num,["0","1"])`. Splitting is bracket-aware so
    /// polynomial literals may contain commas.
    pub fn parse(input: &str) -> Result<SeqSpec> {
        let s = input.trim();
        let unknown = || {
            Error::Parse(format!(
                "unknown sequence {:?}; known sequences: {}",
                s,
                SeqSpec::known_names().join(", ")
            ))
        };
        match s {
            "bernoulli-num" => return Ok(SeqSpec::BernoulliNum),
            "euler-num" => return Ok(SeqSpec::EulerNum),
            "bernoulli-poly" => return Ok(SeqSpec::BernoulliPoly),
            "euler-poly" => return Ok(SeqSpec::EulerPoly),
            "bernoulli-odd-half" => return Ok(SeqSpec::BernoulliOddHalf),
            "bernoulli-even-half" => return Ok(SeqSpec::BernoulliEvenHalf),
            "bernoulli-even-center" => return Ok(SeqSpec::BernoulliEvenCenter),
            _ => {}
        }
        let (head, inner) = match s.split_once('(') {
            Some((head, rest)) if s.ends_with(')') => (head, &rest[..rest.len() - 1]),
            _ => return Err(unknown()),
        };
        let args = split_top_level(inner);
        match (head, args.as_slice()) {
            ("euler-nu-half", [nu]) => {
                let nu = nu
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid nu: {nu:?}")))?;
                Ok(SeqSpec::EulerNuHalf(nu))
            }
            ("shifted", [base, m]) => {
                let m = m
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid shift: {m:?}")))?;
                Ok(SeqSpec::Shifted(Box::new(SeqSpec::parse(base)?), m))
            }
            ("scaled", [base, poly]) => Ok(SeqSpec::Scaled(
                Box::new(SeqSpec::parse(base)?),
                parse_poly_literal(poly)?,
            )),
            ("binomial-transform", [base]) => Ok(SeqSpec::BinomialTransform(
                Box::new(SeqSpec::parse(base)?),
                Poly::var(),
            )),
            _ => Err(unknown()),
        }
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

/// Accepts the canonical JSON-array text form, e.g. `["0","1"]`, or a
/// single rational for constant polynomials.
fn parse_poly_literal(s: &str) -> Result<Poly> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let items: Vec<String> = split_top_level(body)
            .into_iter()
            .map(|item| item.trim().trim_matches('"').to_string())
            .collect();
        Poly::from_text_array(&items)
    } else {
        Ok(Poly::constant(crate::exact::rational::parse_rat(s)?))
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqSpec::BernoulliNum => write!(f, "bernoulli-num"),
            SeqSpec::EulerNum => write!(f, "euler-num"),
            SeqSpec::BernoulliPoly => write!(f, "bernoulli-poly"),
            SeqSpec::EulerPoly => write!(f, "euler-poly"),
            SeqSpec::BernoulliOddHalf => write!(f, "bernoulli-odd-half"),
            SeqSpec::EulerNuHalf(nu) => write!(f, "euler-nu-half({nu})"),
            SeqSpec::BernoulliEvenHalf => write!(f, "bernoulli-even-half"),
            SeqSpec::BernoulliEvenCenter => write!(f, "bernoulli-even-center"),
            SeqSpec::Shifted(base, m) => write!(f, "shifted({base},{m})"),
            SeqSpec::Scaled(base, p) => write!(f, "scaled({base},{:?})", p.to_text_array()),
            SeqSpec::BinomialTransform(base, _) => write!(f, "binomial-transform({base})"),
            SeqSpec::Table(rows) => write!(f, "table[{}]", rows.len()),
        }
    }
}

/// A lazily evaluated, memoized moment sequence. The generator is pure;
/// the cache is internally synchronized so a sequence can be shared
/// across threads.
pub struct MomentSeq {
    spec: SeqSpec,
    cache: Mutex<BTreeMap<usize, Poly>>,
}

impl MomentSeq {
    pub fn new(spec: SeqSpec) -> Self {
        MomentSeq {
            spec,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn parse(name: &str) -> Result<MomentSeq> {
        SeqSpec::parse(name).map(MomentSeq::new)
    }

    pub fn spec(&self) -> &SeqSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    pub fn gen(&self, k: usize) -> Poly {
        if let Some(hit) = self.cache.lock().unwrap().get(&k) {
            return hit.clone();
        }
        let value = self.spec.compute(k);
        self.cache
            .lock()
            .unwrap()
            .entry(k)
            .or_insert_with(|| value.clone());
        value
    }

    pub fn prefix(&self, count: usize) -> Vec<Poly> {
        (0..count).map(|k| self.gen(k)).collect()
    }
}

/// Constructs a sequence from its recipe.
pub fn make_sequence(spec: SeqSpec) -> MomentSeq {
    MomentSeq::new(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{qint, qrat};

    #[test]
    fn odd_half_base_case() {
        let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        // b_0 = B_1((x+1)/2) = x/2
        assert_eq!(seq.gen(0), Poly::from_coeffs(vec![qint(0), qrat(1, 2)]));
    }

    #[test]
    fn euler_nu_two_base_case() {
        let seq = MomentSeq::new(SeqSpec::EulerNuHalf(2));
        // E_2((x+1)/2) = (x^2 - 1)/4
        assert_eq!(
            seq.gen(0),
            Poly::from_coeffs(vec![qrat(-1, 4), qint(0), qrat(1, 4)])
        );
    }

    #[test]
    fn shift_matches_nu_step() {
        // shifting k by one equals stepping nu by two
        let shifted = MomentSeq::new(SeqSpec::Shifted(Box::new(SeqSpec::EulerNuHalf(0)), 1));
        let nu2 = MomentSeq::new(SeqSpec::EulerNuHalf(2));
        for k in 0..=10 {
            assert_eq!(shifted.gen(k), nu2.gen(k), "k = {k}");
        }
    }

    #[test]
    fn cache_is_pure() {
        let seq = MomentSeq::new(SeqSpec::BernoulliOddHalf);
        let first = seq.gen(5);
        let second = seq.gen(5);
        assert_eq!(first, second);
        assert_eq!(first.to_text_array(), second.to_text_array());
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(
            SeqSpec::parse("bernoulli-num").unwrap(),
            SeqSpec::BernoulliNum
        );
        assert_eq!(
            SeqSpec::parse("euler-nu-half(2)").unwrap(),
            SeqSpec::EulerNuHalf(2)
        );
        assert_eq!(
            SeqSpec::parse("shifted(bernoulli-odd-half,1)").unwrap(),
            SeqSpec::Shifted(Box::new(SeqSpec::BernoulliOddHalf), 1)
        );
        let scaled = SeqSpec::parse(r#"scaled(bernoulli-num,["0","1"])"#).unwrap();
        assert_eq!(
            scaled,
            SeqSpec::Scaled(Box::new(SeqSpec::BernoulliNum), Poly::var())
        );
        let err = SeqSpec::parse("no-such-seq").unwrap_err();
        assert!(err.to_string().contains("bernoulli-odd-half"));
    }
}
