//! Named verification suites over a Hopf algebra, its standard test family
//! and any extra objects supplied with it.
//!
//! Pairwise checks that need `X⊗Y` run on pairs with
//! `dim X · dim Y ≤ PAIR_LIMIT`. Hom-dimension comparisons of induced
//! objects run when the unknown count is at most `HOM_UNKNOWN_LIMIT`.

use std::time::Instant;

use rayon::prelude::*;

use crate::action::{
    bicomodule_hom_basis, check_bicomodule_algebra, check_bicomodule_morphism, check_module_object,
    module_object_hom, module_object_hom_basis, Bicomodule, BicomoduleAlgebra, ModuleCategoryObject,
};
use crate::coend::{
    check_coend_multiplication, check_dinaturality, cowedge_factorize, cowedge_source, hat_algebra, j_map,
    twisted_coend_algebra, Cowedge,
};
use crate::comodule::{
    check_comodule, check_left_duality, check_right_duality, comodule_hom, comodule_hom_basis, double_dual,
    left_dual, right_dual, right_dual_uniqueness_defect, tensor_comodule, Comodule,
};
use crate::error::{Error, Result};
use crate::hopf::{
    antipode_inverse, check_antipode_antimultiplicative, check_hopf, grouplike_elements, op_cop, HopfAlgebra,
    HopfAlgebraData,
};
use crate::linalg::LinearMap;
use crate::report::{CheckReport, SuiteReport};
use crate::trace::{
    balancing_map, balancing_natural_in_comodule, balancing_natural_in_module, balancing_unchecked,
    center_defect, check_balanced_axioms, check_balancing_witness, check_center, check_hopf_bimodule,
    forget, free_twisted_yd, gamma_to_rho, hom_hopf_bimodule, induce_with,
    ordinary_yd_check, twisted_yd_check, yd_induction, CenterStructure, HopfBimodule,
};
use crate::zoo::{standard_test_family, test_module_objects, TestFamily, ZooEntry};

pub const PAIR_LIMIT: usize = 256;
pub const HOM_UNKNOWN_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Hopf,
    Comodule,
    Coend,
    Balancing,
    Center,
    Yd,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Hopf, Suite::Comodule, Suite::Coend, Suite::Balancing, Suite::Center, Suite::Yd];

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::EACH.into_iter().chain([Suite::All]).find(|s| s.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Comodule => "comodule",
            Suite::Coend => "coend",
            Suite::Balancing => "balancing",
            Suite::Center => "center",
            Suite::Yd => "yd",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel,
}

/// Objects declared alongside a Hopf algebra, checked in addition to the
/// standard test family.
#[derive(Clone, Debug, Default)]
pub struct Extras {
    pub comodules: Vec<Comodule>,
    pub algebras: Vec<BicomoduleAlgebra>,
    pub modules: Vec<ModuleCategoryObject>,
    pub bimodules: Vec<HopfBimodule>,
    /// `(M, X, β)` triples to compare against the computed balancing.
    pub balancings: Vec<(ModuleCategoryObject, Comodule, LinearMap)>,
}

/// The input of a suite run. `hopf` is `None` when the structure maps fail
/// the Hopf axioms; only the `hopf` suite can then say why.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub data: HopfAlgebraData,
    pub hopf: Option<HopfAlgebra>,
    pub extras: Extras,
}

impl Subject {
    pub fn new(name: impl Into<String>, data: HopfAlgebraData) -> Self {
        let name = name.into();
        let hopf = HopfAlgebra::new(name.clone(), data.clone()).ok();
        Subject { name, data, hopf, extras: Extras::default() }
    }

    pub fn zoo(entry: &ZooEntry, field: crate::linalg::Field) -> Result<Self> {
        let h = entry.build(field)?;
        Ok(Subject { name: h.name().to_string(), data: h.data().clone(), hopf: Some(h), extras: Extras::default() })
    }

    pub fn with_extras(mut self, extras: Extras) -> Self {
        self.extras = extras;
        self
    }
}

type Job<'a> = (String, Box<dyn Fn() -> Result<CheckReport> + Send + Sync + 'a>);

fn job<'a>(key: impl Into<String>, f: impl Fn() -> Result<CheckReport> + Send + Sync + 'a) -> Job<'a> {
    (key.into(), Box::new(f))
}

struct Context {
    h: HopfAlgebra,
    family: TestFamily,
    htilde: BicomoduleAlgebra,
}

pub fn run(subject: &Subject, suite: Suite, exec: Execution) -> SuiteReport {
    let start = Instant::now();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let context = subject.hopf.as_ref().map(|h| -> Result<Context> {
        Ok(Context { h: h.clone(), family: standard_test_family(h)?, htilde: twisted_coend_algebra(h)? })
    });
    let mut jobs: Vec<Job> = Vec::new();
    for s in suites {
        if s == Suite::Hopf {
            jobs.extend(hopf_jobs(subject));
            continue;
        }
        let ctx = match &context {
            Some(Ok(ctx)) => ctx,
            Some(Err(e)) => {
                let msg = e.to_string();
                jobs.push(job(format!("{}: test family", s.name()), move || Err(Error::Internal(msg.clone()))));
                continue;
            }
            None => {
                jobs.push(job(format!("{}: structure", s.name()), || {
                    Err(Error::Precondition("the structure maps do not satisfy the Hopf algebra axioms".into()))
                }));
                continue;
            }
        };
        let extras = &subject.extras;
        match s {
            Suite::Comodule => jobs.extend(comodule_jobs(ctx, extras)),
            Suite::Coend => jobs.extend(coend_jobs(ctx, extras)),
            Suite::Balancing => jobs.extend(balancing_jobs(ctx, extras)),
            Suite::Center => jobs.extend(center_jobs(ctx, extras)),
            Suite::Yd => jobs.extend(yd_jobs(ctx)),
            Suite::Hopf | Suite::All => unreachable!(),
        }
    }
    let run_one = |(key, f): &Job| match f() {
        Ok(mut r) => {
            r.subject = key.clone();
            r
        }
        Err(e) => {
            let mut r = CheckReport::new(key.clone());
            r.fail("error", e.to_string());
            r
        }
    };
    let sections: Vec<CheckReport> = match exec {
        Execution::Serial => jobs.iter().map(run_one).collect(),
        Execution::Parallel => jobs.par_iter().map(run_one).collect(),
    };
    SuiteReport {
        suite: suite.name().into(),
        input: subject.name.clone(),
        sections,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    }
}

fn pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> {
    items.iter().flat_map(move |x| items.iter().map(move |y| (x, y)))
}

fn small_pair(x: &Comodule, y: &Comodule) -> bool {
    x.dim() * y.dim() <= PAIR_LIMIT
}

fn hopf_jobs(s: &Subject) -> Vec<Job<'_>> {
    let data = &s.data;
    vec![
        job("hopf: axioms", move || check_hopf(data)),
        job("hopf: antipode", move || {
            let mut r = check_antipode_antimultiplicative(data)?;
            match antipode_inverse(data) {
                Ok(inv) => {
                    let id = LinearMap::identity(data.field(), data.dim());
                    r.equal("antipode inverse", &data.antipode.compose(&inv)?, &id);
                }
                Err(e) => r.fail("antipode inverse", e.to_string()),
            }
            Ok(r)
        }),
        job("hopf: op-cop", move || check_hopf(&op_cop(data))),
        job("hopf: grouplikes", move || {
            let mut r = CheckReport::new("grouplikes");
            let f = data.field();
            for g in grouplike_elements(data) {
                let v = LinearMap::from_columns(f, data.dim(), vec![g.clone()])?;
                let dg = data.coalgebra.comul.compose(&v)?;
                r.equal(format!("{g:?}: comultiplication"), &dg, &v.kronecker(&v));
                let e = data.coalgebra.counit.compose(&v)?;
                r.condition(format!("{g:?}: counit"), e.is_identity(), || "ε(g) ≠ 1".into());
            }
            Ok(r)
        }),
    ]
}

fn all_comodules<'a>(ctx: &'a Context, extras: &'a Extras) -> Vec<&'a Comodule> {
    ctx.family.comodules.iter().chain(&extras.comodules).collect()
}

fn comodule_jobs<'a>(ctx: &'a Context, extras: &'a Extras) -> Vec<Job<'a>> {
    let xs = all_comodules(ctx, extras);
    let mut jobs = Vec::new();
    for &x in &xs {
        jobs.push(job(format!("comodule: {}", x.name()), move || {
            let mut r = check_comodule(x);
            r.absorb("right dual", check_right_duality(x, &right_dual(x)?));
            r.absorb("left dual", check_left_duality(x, &left_dual(x)?));
            r.absorb("double dual", check_comodule(&double_dual(x)));
            if x.dim() <= 16 {
                let defect = right_dual_uniqueness_defect(x);
                r.condition("right dual coaction unique", defect == 0, || format!("{defect} extra solutions"));
            }
            Ok(r)
        }));
    }
    for (&x, &y) in pairs(&xs).filter(|(x, y)| small_pair(x, y)) {
        jobs.push(job(format!("comodule: {}⊗{}", x.name(), y.name()), move || Ok(check_comodule(&tensor_comodule(x, y)?))));
    }
    jobs
}

fn coend_jobs<'a>(ctx: &'a Context, extras: &'a Extras) -> Vec<Job<'a>> {
    let h = &ctx.h;
    let xs: Vec<&Comodule> = ctx.family.comodules.iter().collect();
    let mut jobs = Vec::new();
    for b in ctx.family.algebras.iter().chain(&extras.algebras) {
        jobs.push(job(format!("coend: bicomodule algebra {}", b.name()), move || Ok(check_bicomodule_algebra(b))));
    }
    for &x in &xs {
        jobs.push(job(format!("coend: j at {}", x.name()), move || {
            let mut r = CheckReport::new("j");
            check_bicomodule_morphism(&mut r, "bicomodule morphism", &cowedge_source(x)?, ctx.htilde.carrier(), &j_map(x));
            Ok(r)
        }));
    }
    jobs.push(job("coend: j_H against the counit", move || {
        let mut r = CheckReport::new("j_H");
        let j = j_map(&Comodule::regular(h));
        let phi = j.compose(&h.id().kronecker(&h.counit().transpose()))?;
        r.equal("j_H(h⊗ε) = h", &phi, &h.id());
        Ok(r)
    }));
    for (&x, &y) in pairs(&xs) {
        jobs.push(job(format!("coend: dinaturality {} → {}", x.name(), y.name()), move || {
            let mut r = CheckReport::new("dinaturality");
            for (k, f) in comodule_hom_basis(x, y)?.iter().enumerate() {
                r.absorb(&format!("#{k}"), check_dinaturality(x, y, f));
            }
            Ok(r)
        }));
    }
    for (&x, &y) in pairs(&xs).filter(|(x, y)| small_pair(x, y)) {
        jobs.push(job(format!("coend: multiplication {}, {}", x.name(), y.name()), move || {
            check_coend_multiplication(x, y)
        }));
    }
    jobs.push(job("coend: co-wedge factorization", move || cowedge_checks(ctx)));
    jobs
}

/// Three co-wedges `α = u∘j`: `u = id`, `u = 2·id + E` for an
/// endomorphism `E`, and `u = (id, 2·id + E)` into `H̃⊕H̃`.
fn cowedge_checks(ctx: &Context) -> Result<CheckReport> {
    let h = &ctx.h;
    let f = h.field();
    let carrier = ctx.htilde.carrier();
    let ends = bicomodule_hom_basis(carrier, carrier)?;
    let two = f.from_i64(2);
    let mut u2 = h.id().scale(&two);
    if let Some(e) = ends.last() {
        let candidate = u2.add(e)?;
        if !candidate.is_zero() {
            u2 = candidate;
        }
    }
    let sum = Bicomodule::direct_sum(carrier, carrier)?;
    let d = h.dim();
    let stacked = LinearMap::from_entries(
        f,
        2 * d,
        d,
        h.id().entries().chain(u2.entries().map(|(r, c, s)| (r + d, c, s))).map(|(r, c, s)| (r, c, s.clone())),
    )?;
    let mut r = CheckReport::new("co-wedges");
    for (name, target, u) in [("identity", carrier.clone(), h.id()), ("endomorphism", carrier.clone(), u2), ("sum", sum, stacked)] {
        let components = ctx.family.comodules.iter().map(|x| Ok((x.clone(), u.compose(&j_map(x))?))).collect::<Result<Vec<_>>>()?;
        match cowedge_factorize(&Cowedge { target, components }) {
            Ok(fac) => {
                r.equal(format!("{name}: recovers u"), &fac.phi, &u);
                r.condition(format!("{name}: unique"), fac.uniqueness_dim == 1, || {
                    format!("solution space of dimension {}", fac.uniqueness_dim)
                });
            }
            Err(e) => r.fail(format!("{name}: factorization"), e.to_string()),
        }
    }
    Ok(r)
}

fn module_objects(ctx: &Context, extras: &Extras, b: &BicomoduleAlgebra) -> Result<Vec<ModuleCategoryObject>> {
    let mut out = test_module_objects(b, &ctx.family)?;
    out.extend(extras.modules.iter().filter(|m| m.algebra().same(b)).cloned());
    Ok(out)
}

fn algebras<'a>(ctx: &'a Context, extras: &'a Extras) -> Vec<&'a BicomoduleAlgebra> {
    let mut out: Vec<&BicomoduleAlgebra> = ctx.family.algebras.iter().collect();
    for b in &extras.algebras {
        if !out.iter().any(|a| a.same(b)) {
            out.push(b);
        }
    }
    out
}

fn balancing_jobs<'a>(ctx: &'a Context, extras: &'a Extras) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for b in algebras(ctx, extras) {
        let objects = match module_objects(ctx, extras, b) {
            Ok(o) => o,
            Err(e) => {
                let msg = e.to_string();
                jobs.push(job(format!("balancing: objects over {}", b.name()), move || Err(Error::Internal(msg.clone()))));
                continue;
            }
        };
        for m in objects.clone() {
            jobs.push(job(format!("balancing: {} over {}", m.name(), b.name()), move || balancing_object_checks(ctx, &m)));
        }
        let objects2 = objects.clone();
        jobs.push(job(format!("balancing: naturality in M over {}", b.name()), move || {
            balancing_module_naturality(ctx, &objects)
        }));
        jobs.push(job(format!("balancing: adjunction over {}", b.name()), move || adjunction_checks(ctx, &objects2)));
    }
    for (m, x, beta) in &extras.balancings {
        jobs.push(job(format!("balancing: declared β at ({}, {})", m.name(), x.name()), move || {
            let mut r = CheckReport::new("declared balancing");
            r.equal("matches the closed form", beta, &balancing_map(&ctx.h, m.dim(), x));
            r.absorb("witness", check_balancing_witness(&balancing_unchecked(&ctx.htilde, m, x)?));
            Ok(r)
        }));
    }
    jobs
}

fn balancing_object_checks(ctx: &Context, m: &ModuleCategoryObject) -> Result<CheckReport> {
    let h = &ctx.h;
    let xs = &ctx.family.comodules;
    let mut r = check_module_object(m);
    r.absorb("induced", check_hopf_bimodule(&induce_with(&ctx.htilde, m)?));
    let mut betas = Vec::new();
    for x in xs {
        let w = balancing_unchecked(&ctx.htilde, m, x)?;
        r.absorb(&format!("β at {}", x.name()), check_balancing_witness(&w));
        betas.push(w.beta);
    }
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            let basis = comodule_hom_basis(x, y)?;
            let bad = basis
                .iter()
                .position(|g| !balancing_natural_in_comodule(h, m.dim(), &betas[i], &betas[j], g));
            r.condition(format!("natural in X: {} → {} ({} maps)", x.name(), y.name(), basis.len()), bad.is_none(), || {
                format!("fails at basis map #{}", bad.unwrap_or_default())
            });
        }
    }
    for (x, y) in pairs(xs).filter(|(x, y)| small_pair(x, y)) {
        r.absorb(&format!("axioms {}, {}", x.name(), y.name()), check_balanced_axioms(m, x, y)?);
    }
    Ok(r)
}

fn balancing_module_naturality(ctx: &Context, objects: &[ModuleCategoryObject]) -> Result<CheckReport> {
    let h = &ctx.h;
    let mut r = CheckReport::new("naturality in M");
    for x in &ctx.family.comodules {
        let betas: Vec<LinearMap> = objects.iter().map(|m| balancing_map(h, m.dim(), x)).collect();
        for (i, m) in objects.iter().enumerate() {
            for (j, m2) in objects.iter().enumerate() {
                let basis = module_object_hom_basis(m, m2)?;
                let bad = basis
                    .iter()
                    .position(|f| !balancing_natural_in_module(h, m.dim(), m2.dim(), x, &betas[i], &betas[j], f));
                r.condition(
                    format!("{} → {} at {} ({} maps)", m.name(), m2.name(), x.name(), basis.len()),
                    bad.is_none(),
                    || format!("fails at basis map #{}", bad.unwrap_or_default()),
                );
            }
        }
    }
    Ok(r)
}

/// `dim Hom(induce M, N) = dim Hom(M, forget N)` with `N = induce M'`.
fn adjunction_checks(ctx: &Context, objects: &[ModuleCategoryObject]) -> Result<CheckReport> {
    let mut r = CheckReport::new("free/forget adjunction");
    let induced = objects.iter().map(|m| induce_with(&ctx.htilde, m)).collect::<Result<Vec<_>>>()?;
    for (m, n_src) in objects.iter().zip(&induced) {
        for n in &induced {
            let left = hom_hopf_bimodule(n_src, n)?.dim();
            let right = module_object_hom(m, &forget(n))?.dim();
            r.condition(format!("{} → {}", n_src.name(), n.name()), left == right, || {
                format!("dim Hom(induce M, N) = {left}, dim Hom(M, forget N) = {right}")
            });
        }
    }
    Ok(r)
}

fn center_jobs<'a>(ctx: &'a Context, extras: &'a Extras) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for b in algebras(ctx, extras) {
        match module_objects(ctx, extras, b) {
            Ok(objects) => {
                for m in objects {
                    jobs.push(job(format!("center: induced from {} over {}", m.name(), b.name()), move || {
                        let n = induce_with(&ctx.htilde, &m)?;
                        center_bimodule_checks(ctx, &n, Some(m.dim()))
                    }));
                }
            }
            Err(e) => {
                let msg = e.to_string();
                jobs.push(job(format!("center: objects over {}", b.name()), move || Err(Error::Internal(msg.clone()))));
            }
        }
    }
    for n in &extras.bimodules {
        jobs.push(job(format!("center: declared {}", n.name()), move || {
            let mut r = check_hopf_bimodule(n);
            if r.passed() {
                r.checks.extend(center_bimodule_checks(ctx, n, None)?.checks);
            }
            Ok(r)
        }));
    }
    jobs
}

/// Round trip, center checks, and (for induced objects, where the module
/// dimension is known) the three corruptions of `ρ`.
fn center_bimodule_checks(ctx: &Context, n: &HopfBimodule, module_dim: Option<usize>) -> Result<CheckReport> {
    let family = &ctx.family.comodules;
    let c = CenterStructure::from_bimodule(n, family)?;
    let mut r = check_center(&c)?;
    match gamma_to_rho(&c) {
        Ok(back) => {
            r.equal("round trip ρ → γ → ρ", back.left_action(), n.left_action());
        }
        Err(e) => r.fail("round trip ρ → γ → ρ", e.to_string()),
    }
    let Some(m_dim) = module_dim else { return Ok(r) };
    let corrupted = [
        ("associativity", corrupt_associativity(n)?, "left associativity"),
        ("unitality", Some(corrupt_unitality(n)?), "left unitality"),
        ("intertwining", corrupt_intertwining(n, m_dim)?, "left action"),
    ];
    for (name, bad, law) in corrupted {
        let Some(bad) = bad else {
            r.pass(format!("corruption {name}: not constructible over a one-dimensional algebra"));
            debug_assert_eq!(n.coend().dim(), 1);
            continue;
        };
        let laws = check_hopf_bimodule(&bad);
        let broken = laws.failures().any(|f| f.id.starts_with(law));
        r.condition(format!("corruption {name}: breaks {law}"), broken, || {
            format!("failing laws: {:?}", laws.failed_ids())
        });
        let cb = CenterStructure::from_bimodule(&bad, family)?;
        let defect = center_defect(&cb)?;
        let rejected = gamma_to_rho(&cb).is_err();
        r.condition(format!("corruption {name}: detected"), defect.is_some() || rejected, || {
            "no center check fails".into()
        });
    }
    Ok(r)
}

/// `ρ∘(P⊗id)` for a unital linear endomorphism `P` of `H̃` that is not
/// multiplicative: a bicomodule endomorphism when one exists, otherwise a
/// rank-one perturbation of the identity. `None` when `dim H̃ = 1`.
pub fn corrupt_associativity(n: &HopfBimodule) -> Result<Option<HopfBimodule>> {
    let a = n.coend();
    let f = n.hopf().field();
    let ends = bicomodule_hom_basis(a.carrier(), a.carrier())?;
    let unit = a.unit();
    let images = LinearMap::from_columns(
        f,
        a.dim(),
        ends.iter().map(|e| e.compose(unit).map(|v| v.column(0).to_vec())).collect::<Result<Vec<_>>>()?,
    )?;
    let kernel = images.kernel();
    for v in &kernel.basis {
        let mut q = LinearMap::zero(f, a.dim(), a.dim());
        for (k, s) in v {
            q = q.add(&ends[*k].scale(s))?;
        }
        let p = LinearMap::identity(f, a.dim()).add(&q)?;
        let lhs = p.compose(a.mul())?;
        let rhs = a.mul().compose(&p.kronecker(&p))?;
        if lhs != rhs {
            let rho = n.left_action().compose(&p.kronecker(&n.id()))?;
            return Ok(Some(n.with_left_action(rho)?));
        }
    }
    // Otherwise P = id + e_k⊗φ with φ = u_j e^k − u_k e^j vanishing on the unit u.
    let d = a.dim();
    let u = unit.column(0);
    let Some((j, uj)) = u.first().cloned() else { return Ok(None) };
    for k in (0..d).rev().filter(|&k| k != j) {
        let uk = u.iter().find(|(r, _)| *r == k).map(|(_, s)| s.clone()).unwrap_or_else(|| f.zero());
        let q = LinearMap::from_entries(f, d, d, [(k, k, uj.clone()), (k, j, -uk)])?;
        let p = LinearMap::identity(f, d).add(&q)?;
        if p.compose(a.mul())? != a.mul().compose(&p.kronecker(&p))? {
            let rho = n.left_action().compose(&p.kronecker(&n.id()))?;
            return Ok(Some(n.with_left_action(rho)?));
        }
    }
    Ok(None)
}

/// `ρ = 0`.
pub fn corrupt_unitality(n: &HopfBimodule) -> Result<HopfBimodule> {
    let rho = LinearMap::zero(n.hopf().field(), n.dim(), n.coend().dim() * n.dim());
    n.with_left_action(rho)
}

/// `ψ∘ρ∘(id⊗ψ⁻¹)` with `ψ = σ⊗id_M` on an induced object `H̃⊗M`, `σ` the
/// shear sending the first basis vector of `H` to itself plus the last.
pub fn corrupt_intertwining(n: &HopfBimodule, module_dim: usize) -> Result<Option<HopfBimodule>> {
    let h = n.hopf();
    let f = h.field();
    let d = h.dim();
    if d < 2 || n.dim() != d * module_dim {
        return Ok(None);
    }
    let shear = LinearMap::identity(f, d).add(&LinearMap::from_entries(f, d, d, [(d - 1, 0, f.one())])?)?;
    let psi = shear.kronecker(&LinearMap::identity(f, module_dim));
    let psi_inv = psi.inverse()?;
    let id_a = LinearMap::identity(f, n.coend().dim());
    let rho = LinearMap::chain(&[&psi, n.left_action(), &id_a.kronecker(&psi_inv)])?;
    Ok(Some(n.with_left_action(rho)?))
}

/// `h⊗x ↦ h_{(1)} x S(h_{(2)})`.
pub fn adjoint_action(h: &HopfAlgebra) -> LinearMap {
    let f = h.field();
    let d = h.dim();
    let triple = h.mul().compose(&h.mul().kronecker(h.antipode())).expect("shape");
    LinearMap::chain(&[&triple, &LinearMap::permute_factors(f, &[d, d, d], &[0, 2, 1]), &h.comul().kronecker(&h.id())])
        .expect("shape")
}

fn yd_jobs(ctx: &Context) -> Vec<Job<'_>> {
    let h = &ctx.h;
    let d = h.dim();
    let xs: Vec<&Comodule> = ctx.family.comodules.iter().collect();
    let mut jobs = Vec::new();
    jobs.push(job("yd: Ĥ", move || Ok(check_bicomodule_algebra(&hat_algebra(h)?))));
    for &x in &xs {
        jobs.push(job(format!("yd: induction of {}", x.name()), move || {
            let m = yd_induction(x)?;
            let mut r = check_module_object(&m);
            r.condition("dimension", m.dim() == x.dim() * d, || format!("{} ≠ {}·{d}", m.dim(), x.dim()));
            Ok(r)
        }));
    }
    for (&x, &y) in pairs(&xs).filter(|(x, y)| x.dim() * y.dim() * d * d <= HOM_UNKNOWN_LIMIT) {
        jobs.push(job(format!("yd: fully faithful {} → {}", x.name(), y.name()), move || {
            let mut r = CheckReport::new("fully faithful");
            let induced = module_object_hom(&yd_induction(x)?, &yd_induction(y)?)?.dim();
            let plain = comodule_hom(x, y)?.dim();
            r.condition("Hom dimensions agree", induced == plain, || format!("{induced} after induction, {plain} before"));
            Ok(r)
        }));
    }
    jobs.push(job("yd: twisted condition", move || yd_examples(ctx)));
    jobs
}

fn yd_examples(ctx: &Context) -> Result<CheckReport> {
    let h = &ctx.h;
    let d = h.dim();
    let mut r = CheckReport::new("twisted YD");
    let mut structures: Vec<(String, Comodule, LinearMap)> = Vec::new();
    for y in ctx.family.comodules.iter().filter(|y| y.dim() * d <= PAIR_LIMIT) {
        let (x, action) = free_twisted_yd(y)?;
        r.absorb(&format!("free on {}", y.name()), check_comodule(&x));
        let yd = twisted_yd_check(&x, &action)?;
        r.condition(format!("free on {}: twisted YD", y.name()), yd.passed(), || format!("{:?}", yd.failed_ids()));
        structures.push((format!("free on {}", y.name()), x, action));
    }
    let regular = Comodule::regular(h);
    let s2 = h.antipode().compose(h.antipode())?;
    let involutive = s2.is_identity();
    if !involutive {
        let yd = twisted_yd_check(&regular, h.mul())?;
        r.condition("negative control: regular action with regular coaction", !yd.passed(), || {
            "unexpectedly satisfies the twisted condition".into()
        });
    } else {
        let counit_action = |x: &Comodule| h.counit().kronecker(&x.id());
        structures.push(("regular action, regular coaction".into(), regular.clone(), h.mul().clone()));
        structures.push(("adjoint action, regular coaction".into(), regular.clone(), adjoint_action(h)));
        for x in ctx.family.comodules.iter().filter(|x| x.dim() == 1) {
            structures.push((format!("counit action on {}", x.name()), x.clone(), counit_action(x)));
        }
        for (name, x, action) in &structures {
            let twisted = twisted_yd_check(x, action)?.passed();
            let ordinary = ordinary_yd_check(x, action)?.passed();
            r.condition(format!("{name}: twisted agrees with ordinary"), twisted == ordinary, || {
                format!("twisted {twisted}, ordinary {ordinary}")
            });
        }
    }
    Ok(r)
}
