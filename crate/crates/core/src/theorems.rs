//! Closed-form complete solution sets for the covered equation families:
//! classification of a spec into a family, emission of its sporadic
//! solutions and parametric families, family expansion, and cross-checks
//! against the brute-force oracle.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::search::{self, EquationSpec, Provenance, SearchBounds, Solution};

/// Which covered equation family a spec falls under.
///
/// A-tags are the p = 2 equations, B-tags the odd Sophie Germain ones.
/// `B4Remark` separates the k = 0, p = 1, 5 (mod 8) case, which rests on
/// a remark rather than the theorem hypothesis. `Unsupported` is a valid
/// verdict, not an error: such specs remain searchable by brute force.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    A1,
    A1K0,
    A2,
    A3,
    B1,
    B2,
    B3,
    B4,
    B4Remark,
    Unsupported,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::A1 => "A1",
            FamilyTag::A1K0 => "A1_k0",
            FamilyTag::A2 => "A2",
            FamilyTag::A3 => "A3",
            FamilyTag::B1 => "B1",
            FamilyTag::B2 => "B2",
            FamilyTag::B3 => "B3",
            FamilyTag::B4 => "B4",
            FamilyTag::B4Remark => "B4_remark",
            FamilyTag::Unsupported => "unsupported",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "A1" => FamilyTag::A1,
            "A1_k0" => FamilyTag::A1K0,
            "A2" => FamilyTag::A2,
            "A3" => FamilyTag::A3,
            "B1" => FamilyTag::B1,
            "B2" => FamilyTag::B2,
            "B3" => FamilyTag::B3,
            "B4" => FamilyTag::B4,
            "B4_remark" => FamilyTag::B4Remark,
            "unsupported" => FamilyTag::Unsupported,
            other => return Err(Error::Parse(format!("unknown family tag {other:?}"))),
        })
    }
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An affine function a*n + b with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
}

impl Affine {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn eval(self, n: u64) -> i64 {
        self.a * n as i64 + self.b
    }

    /// The integer n >= 0 with a*n + b = target, if one exists.
    /// All family formulas have a > 0.
    pub fn solve(self, target: i64) -> Option<u64> {
        debug_assert!(self.a > 0);
        let num = target - self.b;
        if num % self.a != 0 || num < 0 {
            return None;
        }
        Some((num / self.a) as u64)
    }
}

/// One z-term of shape c * 2^(a*n + b) with c > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowTerm {
    pub coeff: u64,
    pub exp: Affine,
}

/// An infinite one-parameter solution family (k, x, y, z) indexed by
/// n >= n_min, attached to a concrete equation shape (alpha, beta, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricFamily {
    pub n_min: u64,
    pub k_formula: Affine,
    pub x_formula: Affine,
    pub y_formula: Affine,
    pub z_terms: Vec<PowTerm>,
    alpha: u8,
    beta: u8,
    p: u64,
}

impl ParametricFamily {
    fn new(
        alpha: u8,
        beta: u8,
        p: u64,
        k: (i64, i64),
        x: (i64, i64),
        y: (i64, i64),
        z: &[(u64, i64, i64)],
    ) -> Self {
        Self {
            n_min: 1,
            k_formula: Affine::new(k.0, k.1),
            x_formula: Affine::new(x.0, x.1),
            y_formula: Affine::new(y.0, y.1),
            z_terms: z
                .iter()
                .map(|&(coeff, a, b)| PowTerm {
                    coeff,
                    exp: Affine::new(a, b),
                })
                .collect(),
            alpha,
            beta,
            p,
        }
    }

    /// The concrete (k, x, y, z) at parameter value n, unverified.
    pub fn instantiate(&self, n: u64) -> Result<(u32, u64, u64, BigInt)> {
        let k = self.k_formula.eval(n);
        let x = self.x_formula.eval(n);
        let y = self.y_formula.eval(n);
        if k < 0 || x < 0 || y < 0 {
            return Err(Error::FamilyVerification(format!(
                "negative exponent at n = {n}: k = {k}, x = {x}, y = {y}"
            )));
        }
        let mut z = BigInt::from(0);
        for term in &self.z_terms {
            let e = term.exp.eval(n);
            if e < 0 {
                return Err(Error::FamilyVerification(format!(
                    "negative power-of-two exponent at n = {n}"
                )));
            }
            z += BigInt::from(term.coeff) << u64::try_from(e).unwrap();
        }
        Ok((k as u32, x as u64, y as u64, z))
    }

    fn spec_at(&self, k: u32) -> Result<EquationSpec> {
        EquationSpec::new(self.alpha, self.beta, BigInt::from(self.p), k)
    }

    /// Human-readable formula rendering, e.g. `k=2n x=2n+2 y=1 z=2^n+2^(n+1)`.
    pub fn describe(&self) -> String {
        fn aff(f: Affine) -> String {
            match (f.a, f.b) {
                (0, b) => format!("{b}"),
                (1, 0) => "n".into(),
                (a, 0) => format!("{a}n"),
                (1, b) if b > 0 => format!("n+{b}"),
                (1, b) => format!("n{b}"),
                (a, b) if b > 0 => format!("{a}n+{b}"),
                (a, b) => format!("{a}n{b}"),
            }
        }
        let z = self
            .z_terms
            .iter()
            .map(|t| {
                let e = aff(t.exp);
                if t.coeff == 1 {
                    format!("2^({e})")
                } else {
                    format!("{}*2^({e})", t.coeff)
                }
            })
            .collect::<Vec<_>>()
            .join("+");
        format!(
            "k={} x={} y={} z={} (n >= {})",
            aff(self.k_formula),
            aff(self.x_formula),
            aff(self.y_formula),
            z,
            self.n_min
        )
    }
}

/// Expands a family to concrete solutions for n in [n_lo, n_hi], each
/// verified exactly against its equation before return.
pub fn expand_family(family: &ParametricFamily, n_lo: u64, n_hi: u64) -> Result<Vec<Solution>> {
    if n_lo < family.n_min {
        return Err(Error::FamilyVerification(format!(
            "n_lo = {n_lo} below family minimum {}",
            family.n_min
        )));
    }
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let (k, x, y, z) = family.instantiate(n)?;
        let spec = family.spec_at(k)?;
        let lhs = search::evaluate(&spec, x, y);
        if lhs != &z * &z {
            return Err(Error::FamilyVerification(format!(
                "family member n = {n} gives (k, x, y, z) = ({k}, {x}, {y}, {z}) but lhs = {lhs}"
            )));
        }
        out.push(Solution {
            x,
            y,
            z,
            k,
            provenance: Provenance::FamilyExpansion,
        });
    }
    Ok(out)
}

fn a1_families() -> Vec<ParametricFamily> {
    vec![
        ParametricFamily::new(0, 0, 2, (2, 0), (2, 2), (0, 1), &[(1, 1, 0), (1, 1, 1)]),
        ParametricFamily::new(0, 0, 2, (2, 2), (2, -2), (0, 1), &[(1, 1, -1), (1, 1, 2)]),
    ]
}

fn a3_families() -> Vec<ParametricFamily> {
    vec![
        ParametricFamily::new(1, 0, 2, (1, -1), (2, 2), (0, 2), &[(3, 1, -1)]),
        ParametricFamily::new(1, 0, 2, (2, -1), (2, -2), (0, 1), &[(3, 1, -1)]),
        ParametricFamily::new(1, 0, 2, (2, -2), (2, -2), (0, 1), &[(1, 1, 0)]),
        ParametricFamily::new(1, 0, 2, (2, -2), (2, 0), (0, 1), &[(1, 1, -1)]),
        ParametricFamily::new(1, 0, 2, (2, -2), (6, -4), (0, 3), &[(11, 3, -3)]),
    ]
}

/// The complete solution set of a covered spec: finite sporadics plus
/// parametric families, with a completeness claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub spec: EquationSpec,
    pub tag: FamilyTag,
    /// Concrete solutions specialized to the spec's k, including family
    /// members at the parameter value that matches k. Sorted by (x, y),
    /// deduplicated by the triple.
    pub sporadic: Vec<Solution>,
    /// The general one-parameter families backing the claim, if any.
    pub families: Vec<ParametricFamily>,
    pub applicability: String,
    pub complete: bool,
}

/// Total classification of a spec into a covered family or `Unsupported`.
pub fn classify(spec: &EquationSpec) -> FamilyTag {
    let k = spec.k();
    if *spec.p() == BigInt::from(2) {
        return match (spec.alpha(), spec.beta()) {
            (0, 0) if k >= 1 => FamilyTag::A1,
            (0, 0) => FamilyTag::A1K0,
            (0, 1) => FamilyTag::A2,
            (1, 0) => FamilyTag::A3,
            _ => unreachable!("spec invariants exclude alpha = beta = 1"),
        };
    }
    let r8 = (spec.p() % 8u32).to_u64().expect("residue fits");
    match (spec.alpha(), spec.beta()) {
        (0, 0) if k % 2 == 1 && (r8 == 3 || r8 == 5) => FamilyTag::B1,
        (0, 0) if k % 2 == 0 && k >= 2 && r8 == 3 => FamilyTag::B2,
        (0, 0) => FamilyTag::Unsupported,
        (0, 1) if r8 % 4 == 3 => FamilyTag::B3,
        (0, 1) => FamilyTag::Unsupported,
        (1, 0) if k >= 1 && (r8 == 1 || r8 == 3 || r8 == 5) => FamilyTag::B4,
        (1, 0) if k == 0 && (r8 == 1 || r8 == 5) => FamilyTag::B4Remark,
        (1, 0) => FamilyTag::Unsupported,
        _ => unreachable!("spec invariants exclude alpha = beta = 1"),
    }
}

fn describe_unsupported(spec: &EquationSpec) -> String {
    let r8 = spec.p() % 8u32;
    format!(
        "no covered family for alpha = {}, beta = {}, p = {} (= {} mod 8), k = {}",
        spec.alpha(),
        spec.beta(),
        spec.p(),
        r8,
        spec.k()
    )
}

/// The theorem-backed solution set for a covered spec, specialized to
/// the spec's k. Errors with `Unsupported` when no theorem applies;
/// that is distinct from an empty solution set.
pub fn closed_form(spec: &EquationSpec) -> Result<SolutionSet> {
    let tag = classify(spec);
    let p = spec.p().to_u64();
    let k = spec.k();
    let mut triples: Vec<(u64, u64, i64)> = Vec::new();
    let mut families: Vec<ParametricFamily> = Vec::new();
    let applicability = match tag {
        FamilyTag::Unsupported => return Err(Error::Unsupported(describe_unsupported(spec))),
        FamilyTag::A1 => {
            triples.push((3, 0, 3));
            families = a1_families();
            "p = 2, k >= 1"
        }
        FamilyTag::A1K0 => {
            triples.extend([(2, 1, 3), (3, 0, 3)]);
            "p = 2, k = 0"
        }
        FamilyTag::A2 => {
            triples.extend([(0, 0, 0), (1, 0, 1)]);
            "p = 2, k >= 0"
        }
        FamilyTag::A3 => {
            triples.push((0, 0, 0));
            families = a3_families();
            "p = 2, k >= 0"
        }
        FamilyTag::B1 => {
            if p == Some(3) {
                triples.push((1, 0, 2));
                if k == 5 {
                    triples.push((0, 1, 15));
                }
            }
            "Sophie Germain p = 3, 5 (mod 8), odd k"
        }
        FamilyTag::B2 => {
            if p == Some(3) {
                triples.push((1, 0, 2));
                if k == 4 {
                    triples.extend([(6, 1, 29), (2, 1, 11)]);
                }
                if k == 6 {
                    triples.push((4, 1, 23));
                }
            }
            "Sophie Germain p = 3 (mod 8), even k >= 2"
        }
        FamilyTag::B3 => {
            triples.push((0, 0, 0));
            if p == Some(3) && k == 3 {
                triples.push((4, 1, 5));
            }
            "Sophie Germain p = 3 (mod 4), k >= 0"
        }
        FamilyTag::B4 => {
            triples.push((0, 0, 0));
            if p == Some(3) && k == 1 {
                triples.push((3, 2, 13));
            }
            if p == Some(3) && k == 2 {
                triples.extend([(3, 1, 1), (1, 1, 5)]);
            }
            if p == Some(11) && k == 2 {
                triples.push((1, 1, 9));
            }
            "Sophie Germain p = 1, 3, 5 (mod 8), k >= 1"
        }
        FamilyTag::B4Remark => {
            triples.push((0, 0, 0));
            "Sophie Germain p = 1, 5 (mod 8), k = 0"
        }
    }
    .to_string();

    let mut sporadic: Vec<Solution> = Vec::new();
    for (x, y, z) in triples {
        let sol = Solution {
            x,
            y,
            z: BigInt::from(z),
            k,
            provenance: Provenance::ClosedForm,
        };
        let lhs = search::evaluate(spec, sol.x, sol.y);
        assert_eq!(lhs, &sol.z * &sol.z, "sporadic table entry must verify");
        sporadic.push(sol);
    }
    // one family member per family where the k-formula hits the spec's k
    for family in &families {
        if let Some(n) = family.k_formula.solve(i64::from(k)) {
            if n >= family.n_min {
                sporadic.extend(expand_family(family, n, n)?);
            }
        }
    }
    sporadic.sort();
    sporadic.dedup();
    Ok(SolutionSet {
        spec: spec.clone(),
        tag,
        sporadic,
        families,
        applicability,
        complete: true,
    })
}

/// Side-by-side comparison of the closed form (restricted to bounds)
/// with the brute-force oracle. A mismatch is data, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub closed_in_bounds: Vec<Solution>,
    pub brute: Vec<Solution>,
    /// Found by brute force but absent from the closed form.
    pub missing_from_closed: Vec<Solution>,
    /// Claimed by the closed form but not found by brute force.
    pub missing_from_brute: Vec<Solution>,
}

impl CrossCheckReport {
    pub fn is_equal(&self) -> bool {
        self.missing_from_closed.is_empty() && self.missing_from_brute.is_empty()
    }
}

pub fn cross_check(spec: &EquationSpec, bounds: SearchBounds) -> Result<CrossCheckReport> {
    let set = closed_form(spec)?;
    let closed_in_bounds: Vec<Solution> = set
        .sporadic
        .into_iter()
        .filter(|s| s.x <= bounds.x_max && s.y <= bounds.y_max)
        .collect();
    let brute = search::brute_force(spec, bounds);
    let missing_from_closed = brute
        .iter()
        .filter(|s| !closed_in_bounds.contains(s))
        .cloned()
        .collect();
    let missing_from_brute = closed_in_bounds
        .iter()
        .filter(|s| !brute.contains(s))
        .cloned()
        .collect();
    Ok(CrossCheckReport {
        closed_in_bounds,
        brute,
        missing_from_closed,
        missing_from_brute,
    })
}

fn dec(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn affine_json(f: Affine) -> Value {
    json!([f.a.to_string(), f.b.to_string()])
}

impl SolutionSet {
    /// Serializes to the stable schema
    /// `{spec:{alpha,beta,p,k}, sporadic:[{x,y,z}], families:[{n_min,
    /// k:[a,b], x:[a,b], y:[a,b], z:[[c,a,b],...]}], complete, tag}`
    /// with every integer as a decimal string.
    pub fn to_json(&self) -> String {
        let mut spec = Map::new();
        spec.insert("alpha".into(), dec(self.spec.alpha()));
        spec.insert("beta".into(), dec(self.spec.beta()));
        spec.insert("p".into(), dec(self.spec.p()));
        spec.insert("k".into(), dec(self.spec.k()));

        let sporadic: Vec<Value> = self
            .sporadic
            .iter()
            .map(|s| {
                let mut m = Map::new();
                m.insert("x".into(), dec(s.x));
                m.insert("y".into(), dec(s.y));
                m.insert("z".into(), dec(&s.z));
                Value::Object(m)
            })
            .collect();

        let families: Vec<Value> = self
            .families
            .iter()
            .map(|f| {
                let mut m = Map::new();
                m.insert("n_min".into(), dec(f.n_min));
                m.insert("k".into(), affine_json(f.k_formula));
                m.insert("x".into(), affine_json(f.x_formula));
                m.insert("y".into(), affine_json(f.y_formula));
                m.insert(
                    "z".into(),
                    Value::Array(
                        f.z_terms
                            .iter()
                            .map(|t| {
                                json!([
                                    t.coeff.to_string(),
                                    t.exp.a.to_string(),
                                    t.exp.b.to_string()
                                ])
                            })
                            .collect(),
                    ),
                );
                Value::Object(m)
            })
            .collect();

        let mut root = Map::new();
        root.insert("spec".into(), Value::Object(spec));
        root.insert("sporadic".into(), Value::Array(sporadic));
        root.insert("families".into(), Value::Array(families));
        root.insert("complete".into(), Value::Bool(self.complete));
        root.insert("tag".into(), dec(self.tag));
        Value::Object(root).to_string()
    }

    pub fn from_json(text: &str) -> Result<SolutionSet> {
        let root: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let get = |v: &Value, key: &str| -> Result<Value> {
            v.get(key)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
        };
        let int = |v: &Value| -> Result<BigInt> {
            v.as_str()
                .ok_or_else(|| Error::Parse("expected decimal string".into()))?
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(e.to_string()))
        };
        let small = |v: &Value| -> Result<i64> {
            int(v)?
                .to_i64()
                .ok_or_else(|| Error::Parse("integer out of range".into()))
        };
        let affine = |v: &Value| -> Result<Affine> {
            let arr = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("expected [a, b]".into()))?;
            Ok(Affine::new(small(&arr[0])?, small(&arr[1])?))
        };

        let spec_v = get(&root, "spec")?;
        let spec = EquationSpec::new(
            u8::try_from(small(&get(&spec_v, "alpha")?)?)
                .map_err(|_| Error::Parse("alpha out of range".into()))?,
            u8::try_from(small(&get(&spec_v, "beta")?)?)
                .map_err(|_| Error::Parse("beta out of range".into()))?,
            int(&get(&spec_v, "p")?)?,
            u32::try_from(small(&get(&spec_v, "k")?)?)
                .map_err(|_| Error::Parse("k out of range".into()))?,
        )?;

        let mut sporadic = Vec::new();
        for item in get(&root, "sporadic")?
            .as_array()
            .ok_or_else(|| Error::Parse("sporadic must be an array".into()))?
        {
            sporadic.push(Solution {
                x: small(&get(item, "x")?)? as u64,
                y: small(&get(item, "y")?)? as u64,
                z: int(&get(item, "z")?)?,
                k: spec.k(),
                provenance: Provenance::ClosedForm,
            });
        }

        let mut families = Vec::new();
        for item in get(&root, "families")?
            .as_array()
            .ok_or_else(|| Error::Parse("families must be an array".into()))?
        {
            let mut z_terms = Vec::new();
            for t in get(item, "z")?
                .as_array()
                .ok_or_else(|| Error::Parse("z must be an array".into()))?
            {
                let arr = t
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| Error::Parse("expected [c, a, b]".into()))?;
                z_terms.push(PowTerm {
                    coeff: small(&arr[0])? as u64,
                    exp: Affine::new(small(&arr[1])?, small(&arr[2])?),
                });
            }
            families.push(ParametricFamily {
                n_min: small(&get(item, "n_min")?)? as u64,
                k_formula: affine(&get(item, "k")?)?,
                x_formula: affine(&get(item, "x")?)?,
                y_formula: affine(&get(item, "y")?)?,
                z_terms,
                alpha: spec.alpha(),
                beta: spec.beta(),
                p: spec
                    .p()
                    .to_u64()
                    .ok_or_else(|| Error::Parse("family p out of range".into()))?,
            });
        }

        let tag = FamilyTag::parse(
            get(&root, "tag")?
                .as_str()
                .ok_or_else(|| Error::Parse("tag must be a string".into()))?,
        )?;
        let complete = get(&root, "complete")?
            .as_bool()
            .ok_or_else(|| Error::Parse("complete must be a bool".into()))?;
        let applicability = String::new();
        let mut set = SolutionSet {
            spec,
            tag,
            sporadic,
            families,
            applicability,
            complete,
        };
        // applicability is presentation-only and not part of the schema;
        // regenerate it from the tag when possible
        if set.tag != FamilyTag::Unsupported {
            if let Ok(fresh) = closed_form(&set.spec) {
                set.applicability = fresh.applicability;
            }
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(alpha: u8, beta: u8, p: i64, k: u32) -> EquationSpec {
        EquationSpec::new(alpha, beta, BigInt::from(p), k).unwrap()
    }

    fn triples(sols: &[Solution]) -> Vec<(u64, u64, i64)> {
        sols.iter()
            .map(|s| (s.x, s.y, s.z.to_i64().unwrap()))
            .collect()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&spec(0, 0, 3, 5)), FamilyTag::B1);
        assert_eq!(classify(&spec(0, 1, 2, 7)), FamilyTag::A2);
        assert_eq!(classify(&spec(0, 0, 23, 2)), FamilyTag::Unsupported);
        assert_eq!(classify(&spec(0, 0, 2, 3)), FamilyTag::A1);
        assert_eq!(classify(&spec(0, 0, 2, 0)), FamilyTag::A1K0);
        assert_eq!(classify(&spec(1, 0, 2, 0)), FamilyTag::A3);
        assert_eq!(classify(&spec(0, 0, 3, 4)), FamilyTag::B2);
        assert_eq!(classify(&spec(0, 0, 3, 0)), FamilyTag::Unsupported);
        assert_eq!(classify(&spec(0, 0, 5, 2)), FamilyTag::Unsupported);
        assert_eq!(classify(&spec(0, 1, 23, 4)), FamilyTag::B3);
        assert_eq!(classify(&spec(0, 1, 5, 1)), FamilyTag::Unsupported);
        assert_eq!(classify(&spec(1, 0, 3, 2)), FamilyTag::B4);
        assert_eq!(classify(&spec(1, 0, 3, 0)), FamilyTag::Unsupported);
        assert_eq!(classify(&spec(1, 0, 41, 0)), FamilyTag::B4Remark);
        assert_eq!(classify(&spec(1, 0, 5, 3)), FamilyTag::B4);
        assert_eq!(classify(&spec(1, 0, 5, 0)), FamilyTag::B4Remark);
        assert_eq!(classify(&spec(1, 0, 23, 2)), FamilyTag::Unsupported);
    }

    #[test]
    fn closed_form_examples() {
        let set = closed_form(&spec(0, 0, 2, 4)).unwrap();
        assert_eq!(triples(&set.sporadic), vec![(0, 1, 9), (3, 0, 3), (6, 1, 12)]);
        assert!(set.complete);

        let set = closed_form(&spec(0, 1, 3, 3)).unwrap();
        assert_eq!(triples(&set.sporadic), vec![(0, 0, 0), (4, 1, 5)]);

        let set = closed_form(&spec(1, 0, 41, 2)).unwrap();
        assert_eq!(triples(&set.sporadic), vec![(0, 0, 0)]);

        assert!(matches!(
            closed_form(&spec(0, 0, 23, 2)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn expand_family_examples() {
        let a3 = a3_families();
        let fifth = &a3[4];
        let sols = expand_family(fifth, 1, 1).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!((sols[0].k, sols[0].x, sols[0].y), (0, 2, 3));
        assert_eq!(sols[0].z, BigInt::from(11));

        let a1 = a1_families();
        let sols = expand_family(&a1[0], 1, 1).unwrap();
        assert_eq!((sols[0].k, sols[0].x, sols[0].y), (2, 4, 1));
        assert_eq!(sols[0].z, BigInt::from(6));

        assert!(expand_family(&a1[0], 0, 3).is_err());
    }

    #[test]
    fn family_members_verify_to_n_50() {
        for family in a1_families().iter().chain(a3_families().iter()) {
            let sols = expand_family(family, 1, 50).unwrap();
            assert_eq!(sols.len(), 50);
        }
    }

    #[test]
    fn cross_check_examples() {
        let r = cross_check(&spec(0, 1, 2, 5), SearchBounds::new(8, 8)).unwrap();
        assert!(r.is_equal());
        assert_eq!(triples(&r.brute), vec![(0, 0, 0), (1, 0, 1)]);

        let r = cross_check(&spec(1, 0, 3, 2), SearchBounds::new(6, 4)).unwrap();
        assert!(r.is_equal());
        assert_eq!(triples(&r.brute), vec![(0, 0, 0), (1, 1, 5), (3, 1, 1)]);

        // even k = 2 routes to the even-k family; only the y = 0 solution
        let r = cross_check(&spec(0, 0, 3, 2), SearchBounds::new(10, 4)).unwrap();
        assert!(r.is_equal());
        assert_eq!(triples(&r.brute), vec![(1, 0, 2)]);
    }

    #[test]
    fn json_round_trip() {
        for sp in [
            spec(0, 0, 2, 4),
            spec(1, 0, 2, 3),
            spec(0, 0, 3, 6),
            spec(1, 0, 11, 2),
        ] {
            let set = closed_form(&sp).unwrap();
            let text = set.to_json();
            let parsed = SolutionSet::from_json(&text).unwrap();
            assert_eq!(parsed.to_json(), text, "byte-identical reserialization");
            assert_eq!(parsed.sporadic, set.sporadic);
            assert_eq!(parsed.families, set.families);
            assert_eq!(parsed.tag, set.tag);
        }
        assert!(SolutionSet::from_json("{}").is_err());
        assert!(SolutionSet::from_json("not json").is_err());
    }
}
