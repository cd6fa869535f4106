//! Built-in example Hopf algebras and their standard test families.
//!
//! Basis orders are fixed:
//! - `group_algebra(n)`: `g^0, …, g^{n-1}`;
//! - `function_algebra(n)`: indicator functions `δ_0, …, δ_{n-1}` on ℤ/n;
//! - `taft(n, q)`: `g^i x^j` at index `i + n·j`, so `sweedler_h4` has basis
//!   `1, g, x, gx`.

use crate::action::{left_act, right_act, BicomoduleAlgebra, ModuleCategoryObject};
use crate::coend::{hat_algebra, twisted_coend_algebra};
use crate::comodule::{tensor_comodule, Comodule};
use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, CoalgebraData, HopfAlgebra, HopfAlgebraData};
use crate::linalg::matrix::normalize;
use crate::linalg::{Field, LinearMap, Scalar, SparseVec};

fn require_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("group order must be positive".into()));
    }
    Ok(())
}

fn assemble(
    field: Field,
    dim: usize,
    product: impl Fn(usize, usize) -> SparseVec,
    unit: SparseVec,
    coproduct: impl Fn(usize) -> SparseVec,
    counit: impl Fn(usize) -> Scalar,
    antipode: impl Fn(usize) -> SparseVec,
) -> HopfAlgebraData {
    let mul = LinearMap::from_columns(
        field,
        dim,
        (0..dim * dim).map(|c| product(c / dim, c % dim)).collect(),
    )
    .expect("in range");
    let unit = LinearMap::from_columns(field, dim, vec![unit]).expect("in range");
    let comul = LinearMap::from_columns(field, dim * dim, (0..dim).map(coproduct).collect())
        .expect("in range");
    let counit = LinearMap::row_vector(field, (0..dim).map(counit).collect());
    let antipode = LinearMap::from_columns(field, dim, (0..dim).map(antipode).collect())
        .expect("in range");
    HopfAlgebraData {
        algebra: AlgebraData { dim, mul, unit },
        coalgebra: CoalgebraData { dim, comul, counit },
        antipode,
    }
}

/// The group algebra of ℤ/n.
pub fn group_algebra(n: usize, field: Field) -> Result<HopfAlgebraData> {
    require_order(n)?;
    let one = field.one();
    Ok(assemble(
        field,
        n,
        |i, j| vec![((i + j) % n, one.clone())],
        vec![(0, one.clone())],
        |i| vec![(i * n + i, one.clone())],
        |_| one.clone(),
        |i| vec![((n - i) % n, one.clone())],
    ))
}

/// Functions on ℤ/n, the dual of [`group_algebra`].
pub fn function_algebra(n: usize, field: Field) -> Result<HopfAlgebraData> {
    require_order(n)?;
    let one = field.one();
    Ok(assemble(
        field,
        n,
        |i, j| if i == j { vec![(i, one.clone())] } else { Vec::new() },
        (0..n).map(|i| (i, one.clone())).collect(),
        |k| (0..n).map(|i| (i * n + (k + n - i) % n, one.clone())).collect(),
        |k| if k == 0 { one.clone() } else { field.zero() },
        |k| vec![((n - k) % n, one.clone())],
    ))
}

/// Sweedler's four-dimensional Hopf algebra; needs characteristic ≠ 2.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebraData> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidParameter("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    taft(2, &field.from_i64(-1))
}

/// The Taft algebra of dimension n²: `g^n = 1`, `x^n = 0`, `xg = q·gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = -g^{-1}x`, for `q` a primitive
/// n-th root of unity in the field of `q`.
pub fn taft(n: usize, q: &Scalar) -> Result<HopfAlgebraData> {
    if n < 2 {
        return Err(Error::InvalidParameter("Taft algebras need n ≥ 2".into()));
    }
    let field = q.field();
    let order = (1..=n).find(|&k| q.pow(k as u64).is_one());
    if order != Some(n) {
        return Err(Error::InvalidParameter(format!("{q} is not a primitive {n}-th root of unity in {field}")));
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| a % n + n * b;
    let one = field.one();
    let product = |i: usize, j: usize| -> SparseVec {
        let (a, b) = (i % n, i / n);
        let (c, d) = (j % n, j / n);
        if b + d >= n {
            return Vec::new();
        }
        vec![(idx(a + c, b + d), q.pow((b * c) as u64))]
    };
    let mul_vec = |u: &SparseVec, v: &SparseVec| -> SparseVec {
        let mut out = Vec::new();
        for (i, s) in u {
            for (j, t) in v {
                out.extend(product(*i, *j).into_iter().map(|(k, c)| (k, &(s * t) * &c)));
            }
        }
        normalize(out)
    };
    // Products in H ⊗ H, componentwise.
    let mul2 = |u: &SparseVec, v: &SparseVec| -> SparseVec {
        let mut out = Vec::new();
        for (i, s) in u {
            for (j, t) in v {
                let left = product(i / dim, j / dim);
                let right = product(i % dim, j % dim);
                let st = s * t;
                for (l, a) in &left {
                    for (r, b) in &right {
                        out.push((l * dim + r, &(&st * a) * b));
                    }
                }
            }
        }
        normalize(out)
    };
    let g = idx(1, 0);
    let x = idx(0, 1);
    let delta_g: SparseVec = vec![(g * dim + g, one.clone())];
    let delta_x: SparseVec = normalize(vec![(x * dim, one.clone()), (g * dim + x, one.clone())]);
    let coproduct = |k: usize| -> SparseVec {
        let (a, b) = (k % n, k / n);
        let mut acc: SparseVec = vec![(0, one.clone())];
        for _ in 0..a {
            acc = mul2(&acc, &delta_g);
        }
        for _ in 0..b {
            acc = mul2(&acc, &delta_x);
        }
        acc
    };
    let g_inv: SparseVec = vec![(idx(n - 1, 0), one.clone())];
    let s_x = mul_vec(&vec![(idx(n - 1, 0), field.from_i64(-1))], &vec![(x, one.clone())]);
    let antipode = |k: usize| -> SparseVec {
        // S(g^a x^b) = S(x)^b S(g)^a.
        let (a, b) = (k % n, k / n);
        let mut acc: SparseVec = vec![(0, one.clone())];
        for _ in 0..b {
            acc = mul_vec(&acc, &s_x);
        }
        for _ in 0..a {
            acc = mul_vec(&acc, &g_inv);
        }
        acc
    };
    Ok(assemble(
        field,
        dim,
        product,
        vec![(0, one.clone())],
        coproduct,
        |k| if k / n == 0 { one.clone() } else { field.zero() },
        antipode,
    ))
}

/// A named zoo entry, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZooEntry {
    GroupAlgebra(usize),
    FunctionAlgebra(usize),
    SweedlerH4,
    /// `taft(n, q)`; the field is GF(p) unless given explicitly.
    Taft { n: usize, q: i64, p: Option<u32> },
}

impl ZooEntry {
    /// Parses `group_algebra(n)`, `function_algebra(n)`, `sweedler_h4` and
    /// `taft(n,q,p)` / `taft(n,q)`.
    pub fn parse(text: &str) -> Result<ZooEntry> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, args) = match text.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidParameter(format!("unbalanced parentheses in {text}")))?;
                let args = inner
                    .split(',')
                    .map(|a| a.parse::<i64>().map_err(|_| Error::InvalidParameter(format!("bad argument {a:?}"))))
                    .collect::<Result<Vec<i64>>>()?;
                (name.to_string(), args)
            }
            None => (text.clone(), Vec::new()),
        };
        let positive = |v: i64| -> Result<usize> {
            usize::try_from(v).ok().filter(|&n| n > 0).ok_or_else(|| Error::InvalidParameter(format!("{v} must be positive")))
        };
        match (name.as_str(), args.as_slice()) {
            ("group_algebra", [n]) => Ok(ZooEntry::GroupAlgebra(positive(*n)?)),
            ("function_algebra", [n]) => Ok(ZooEntry::FunctionAlgebra(positive(*n)?)),
            ("sweedler_h4", []) => Ok(ZooEntry::SweedlerH4),
            ("taft", [n, q]) => Ok(ZooEntry::Taft { n: positive(*n)?, q: *q, p: None }),
            ("taft", [n, q, p]) => Ok(ZooEntry::Taft {
                n: positive(*n)?,
                q: *q,
                p: Some(u32::try_from(*p).map_err(|_| Error::InvalidParameter(format!("bad prime {p}")))?),
            }),
            _ => Err(Error::InvalidParameter(format!("unknown zoo entry {text}"))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            ZooEntry::GroupAlgebra(n) => format!("group_algebra({n})"),
            ZooEntry::FunctionAlgebra(n) => format!("function_algebra({n})"),
            ZooEntry::SweedlerH4 => "sweedler_h4".into(),
            ZooEntry::Taft { n, q, p: Some(p) } => format!("taft({n},{q},{p})"),
            ZooEntry::Taft { n, q, p: None } => format!("taft({n},{q})"),
        }
    }

    /// Human-readable labels in basis order.
    pub fn basis_labels(&self) -> Vec<String> {
        let power = |v: &str, k: usize| match k {
            0 => String::new(),
            1 => v.to_string(),
            k => format!("{v}^{k}"),
        };
        let taft = |n: usize| {
            (0..n * n)
                .map(|k| {
                    let label = power("g", k % n) + &power("x", k / n);
                    if label.is_empty() { "1".to_string() } else { label }
                })
                .collect()
        };
        match self {
            ZooEntry::GroupAlgebra(n) => (0..*n).map(|i| if i == 0 { "1".into() } else { power("g", i) }).collect(),
            ZooEntry::FunctionAlgebra(n) => (0..*n).map(|i| format!("δ{i}")).collect(),
            ZooEntry::SweedlerH4 => taft(2),
            ZooEntry::Taft { n, .. } => taft(*n),
        }
    }

    /// Builds the entry; a prime given in the name overrides `field`.
    pub fn build(&self, field: Field) -> Result<HopfAlgebra> {
        let data = match self {
            ZooEntry::GroupAlgebra(n) => group_algebra(*n, field)?,
            ZooEntry::FunctionAlgebra(n) => function_algebra(*n, field)?,
            ZooEntry::SweedlerH4 => sweedler_h4(field)?,
            ZooEntry::Taft { n, q, p } => {
                let field = match p {
                    Some(p) => Field::prime(*p as u64)?,
                    None => field,
                };
                taft(*n, &field.from_i64(*q))?
            }
        };
        HopfAlgebra::new(self.name(), data)
    }
}

/// Comodules and bicomodule algebras that suites quantify over.
#[derive(Clone, Debug)]
pub struct TestFamily {
    /// Trivial, regular, one simple per nontrivial grouplike, regular⊗regular.
    pub comodules: Vec<Comodule>,
    /// Trivial `k`, `Ĥ`, `H̃`.
    pub algebras: Vec<BicomoduleAlgebra>,
}

impl TestFamily {
    /// The one-dimensional comodules of nontrivial grouplikes.
    pub fn grouplike_simples(&self) -> impl Iterator<Item = &Comodule> {
        self.comodules.iter().filter(|x| x.name().starts_with("grouplike"))
    }

    /// Trivial, regular and the grouplike simples, i.e. the family without
    /// the tensor square.
    pub fn small_comodules(&self) -> Vec<Comodule> {
        self.comodules.iter().filter(|x| x.name() != "regular⊗regular").cloned().collect()
    }
}

pub fn standard_test_family(h: &HopfAlgebra) -> Result<TestFamily> {
    let mut comodules = vec![Comodule::trivial(h), Comodule::regular(h)];
    let unit: SparseVec = h.unit().column(0).to_vec();
    for (k, g) in h.grouplikes().into_iter().filter(|g| *g != unit).enumerate() {
        comodules.push(Comodule::grouplike(h, &g, format!("grouplike {}", k + 1))?);
    }
    let reg = Comodule::regular(h);
    comodules.push(tensor_comodule(&reg, &reg)?.renamed("regular⊗regular"));
    let algebras = vec![BicomoduleAlgebra::trivial(h), hat_algebra(h)?, twisted_coend_algebra(h)?];
    Ok(TestFamily { comodules, algebras })
}

/// `B`, `B◁X_g` and `X_g▷B` for each nontrivial grouplike simple `X_g`.
pub fn test_module_objects(b: &BicomoduleAlgebra, family: &TestFamily) -> Result<Vec<ModuleCategoryObject>> {
    let regular = ModuleCategoryObject::regular(b);
    let mut out = vec![regular.clone()];
    for x in family.grouplike_simples() {
        out.push(right_act(&regular, x)?);
        out.push(left_act(x, &regular)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf;

    #[test]
    fn zero_order_rejected() {
        assert!(group_algebra(0, Field::Rational).is_err());
        assert!(function_algebra(0, Field::Rational).is_err());
    }

    #[test]
    fn taft_needs_primitive_root() {
        let f7 = Field::Prime(7);
        assert!(taft(3, &f7.from_i64(1)).is_err());
        assert!(taft(3, &f7.from_i64(6)).is_err());
        assert!(check_hopf(&taft(3, &f7.from_i64(2)).unwrap()).unwrap().passed());
    }

    #[test]
    fn sweedler_needs_odd_characteristic() {
        assert!(sweedler_h4(Field::Prime(2)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!(ZooEntry::parse("taft(3, 2, 7)").unwrap(), ZooEntry::Taft { n: 3, q: 2, p: Some(7) });
        assert_eq!(ZooEntry::parse("group_algebra(4)").unwrap(), ZooEntry::GroupAlgebra(4));
        assert!(ZooEntry::parse("group_algebra(0)").is_err());
        assert!(ZooEntry::parse("klein").is_err());
        for name in ["group_algebra(2)", "function_algebra(3)", "sweedler_h4", "taft(3,2,7)"] {
            assert_eq!(ZooEntry::parse(name).unwrap().name(), name);
        }
    }
}
