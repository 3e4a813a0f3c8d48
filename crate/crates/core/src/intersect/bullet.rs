use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::join::{diagonal_pullback, diagonal_system, ruled_join, LinearSystem};
use super::sv::{sv, sv_mass_check, SvOutput};
use crate::cycles::{
    multiplicity_at, split_by, support_contained, supports_equal, Chunk, Cycle,
};
use crate::ideals::{hilbert, intersect_ideals, Ideal};
use crate::kernel::{ProjPoint, Seed};
use crate::{Error, Result};

/// Dimension and degree of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSummary {
    pub label: String,
    /// Dimensions present, ascending.
    pub dims: Vec<usize>,
    pub degree: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Fixed,
    Moving,
}

impl ComponentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ComponentKind::Fixed => "fixed",
            ComponentKind::Moving => "moving",
        }
    }
}

/// A reported piece of the product.
///
/// Fixed components carry one chunk that every run reproduces. A moving
/// component collects, for one dimension, the parts that vary with the
/// sampled cuts: one witness chunk list per run.
#[derive(Clone, Debug)]
pub struct Component {
    pub kind: ComponentKind,
    pub dim: usize,
    pub degree: u64,
    pub chunk: Option<Chunk>,
    pub witnesses: Vec<Vec<Chunk>>,
}

impl Component {
    /// The ideal of a fixed component.
    pub fn ideal(&self) -> Option<&Ideal> {
        self.chunk.as_ref().map(Chunk::ideal)
    }

    /// One witness ideal per run, the intersection of that run's moving chunks.
    pub fn witness_ideals(&self) -> Result<Vec<Ideal>> {
        self.witnesses
            .iter()
            .map(|w| {
                let mut acc: Option<Ideal> = None;
                for c in w {
                    acc = Some(match acc {
                        None => c.ideal().clone(),
                        Some(a) => intersect_ideals(&a, c.ideal())?,
                    });
                }
                Ok(acc.map(|a| a.canonical()).unwrap_or_else(|| Ideal::unit(1)))
            })
            .collect()
    }
}

/// Pulled-back pieces of one run, grouped by dimension.
#[derive(Clone, Debug)]
pub struct RunParts {
    pub seed: Seed,
    pub by_dim: BTreeMap<usize, Vec<Chunk>>,
    pub residual_degree: u64,
    pub sv: Vec<SvOutput>,
}

#[derive(Clone, Debug)]
pub struct BulletReport {
    pub ambient: usize,
    pub inputs: Vec<InputSummary>,
    pub rho: i64,
    pub d: i64,
    pub components: Vec<Component>,
    pub total_degree: u64,
    pub residual_degree: u64,
    pub bezout_product: u64,
    pub fulton_degree: u64,
    pub seeds: Vec<u64>,
    pub runs: usize,
    pub run_parts: Vec<RunParts>,
}

impl BulletReport {
    pub fn components_of_dim(&self, dim: usize) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(move |c| c.dim == dim)
    }

    pub fn fixed(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Fixed)
    }

    pub fn moving(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Moving)
    }

    /// The fixed components as a cycle; `None` if anything moves.
    pub fn fixed_cycle(&self) -> Option<Cycle> {
        if self.moving().next().is_some() {
            return None;
        }
        let chunks = self.components.iter().filter_map(|c| c.chunk.clone()).collect();
        Cycle::new(self.ambient, chunks).ok()
    }

    pub fn degree_by_dim(&self) -> BTreeMap<usize, u64> {
        let mut m = BTreeMap::new();
        for c in &self.components {
            *m.entry(c.dim).or_insert(0) += c.degree;
        }
        m
    }
}

/// Adds a chunk to a list, merging coefficients of equal ideals.
fn merge_into(list: &mut Vec<Chunk>, chunk: Chunk) {
    if let Some(p) = list.iter_mut().find(|p| p.ideal() == chunk.ideal()) {
        *p = p.with_coefficient(p.coefficient() + chunk.coefficient());
    } else {
        list.push(chunk);
    }
}

fn summarize(c: &Cycle) -> InputSummary {
    InputSummary { label: String::from(c.label()), dims: c.dims(), degree: c.degree() }
}

/// How the pieces of one run are produced.
enum Path<'a> {
    Join { factors: Vec<Vec<Cycle>>, n: usize },
    Direct { system: LinearSystem, target: &'a Cycle },
}

impl Path<'_> {
    fn run(&self, seed: Seed) -> Result<RunParts> {
        let mut parts = RunParts { seed, by_dim: BTreeMap::new(), residual_degree: 0, sv: Vec::new() };
        match self {
            Path::Join { factors, n } => {
                for combo in factors {
                    let r = combo.len();
                    let join = ruled_join(combo)?;
                    let sys = diagonal_system(r, *n)?;
                    let out = sv(&join, &sys, seed)?;
                    let audit = sv_mass_check(&out, &join, sys.forms().len())?;
                    for ch in out.inside.iter().flatten() {
                        for piece in diagonal_pullback(ch, r, *n)? {
                            merge_into(parts.by_dim.entry(piece.dim()).or_default(), piece);
                        }
                    }
                    parts.residual_degree += audit.deficit;
                    parts.sv.push(out);
                }
            }
            Path::Direct { system, target } => {
                let out = sv(target, system, seed)?;
                let audit = sv_mass_check(&out, target, system.forms().len())?;
                for ch in out.inside.iter().flatten() {
                    merge_into(parts.by_dim.entry(ch.dim()).or_default(), ch.clone());
                }
                parts.residual_degree = audit.deficit;
                parts.sv.push(out);
            }
        }
        Ok(parts)
    }
}

/// Fixed and moving parts of one dimension across runs.
#[derive(Clone, Debug)]
pub struct Classified {
    pub fixed: Vec<Chunk>,
    pub moving_degree: u64,
    pub moving: Vec<Vec<Chunk>>,
}

fn support_of(chunks: &[Chunk], nvars: usize) -> Ideal {
    chunks.iter().fold(Ideal::unit(nvars), |acc, c| acc.product(c.ideal()))
}

/// Separates the pieces of one dimension into those common to all runs and
/// those that move with the sampled cuts.
pub fn classify_fixed_moving(runs: &[Vec<Chunk>], nvars: usize) -> Result<Classified> {
    if runs.len() < 2 {
        return Err(Error::InvalidArgument("classification needs at least two runs".into()));
    }
    let common = runs.iter().fold(Ideal::zero(nvars), |acc, r| acc.sum(&support_of(r, nvars)));
    let mut fixed: Vec<Vec<Chunk>> = Vec::with_capacity(runs.len());
    let mut moving: Vec<Vec<Chunk>> = Vec::with_capacity(runs.len());
    for run in runs {
        let (mut f, mut m) = (Vec::new(), Vec::new());
        for c in run {
            let (inside, outside) = split_by(c, &common)?;
            if let Some(i) = inside {
                merge_into(&mut f, i);
            }
            if let Some(o) = outside {
                merge_into(&mut m, o);
            }
        }
        fixed.push(f);
        moving.push(m);
    }
    let degree = |cs: &[Chunk]| cs.iter().map(Chunk::degree).sum::<u64>();
    for k in 1..runs.len() {
        if degree(&fixed[k]) != degree(&fixed[0]) || degree(&moving[k]) != degree(&moving[0]) {
            return Err(Error::Instability(alloc::format!(
                "run {} gives fixed/moving degrees {}/{} against {}/{}",
                k,
                degree(&fixed[k]),
                degree(&moving[k]),
                degree(&fixed[0]),
                degree(&moving[0])
            )));
        }
        if !supports_equal(&support_of(&fixed[k], nvars), &support_of(&fixed[0], nvars))? {
            return Err(Error::Instability(alloc::format!("fixed supports of runs 0 and {} differ", k)));
        }
    }
    let moving_degree = degree(&moving[0]);
    Ok(Classified { fixed: fixed.swap_remove(0), moving_degree, moving })
}

fn classify_all(parts: &[RunParts], nvars: usize) -> Result<Vec<Component>> {
    let mut dims: Vec<usize> = parts.iter().flat_map(|p| p.by_dim.keys().copied()).collect();
    dims.sort_unstable();
    dims.dedup();
    let mut comps = Vec::new();
    for dim in dims {
        let runs: Vec<Vec<Chunk>> = parts.iter().map(|p| p.by_dim.get(&dim).cloned().unwrap_or_default()).collect();
        let cl = classify_fixed_moving(&runs, nvars)?;
        for f in cl.fixed {
            comps.push(Component { kind: ComponentKind::Fixed, dim, degree: f.degree(), chunk: Some(f), witnesses: Vec::new() });
        }
        if cl.moving_degree > 0 {
            comps.push(Component {
                kind: ComponentKind::Moving,
                dim,
                degree: cl.moving_degree,
                chunk: None,
                witnesses: cl.moving,
            });
        }
    }
    Ok(comps)
}

fn sort_key(c: &Component) -> (usize, ComponentKind, String) {
    let printed = match &c.chunk {
        Some(ch) => alloc::format!("{:?}", ch.ideal().gens()),
        None => String::new(),
    };
    (c.dim, c.kind, printed)
}

struct Job<'a> {
    path: Path<'a>,
    inputs: Vec<&'a Cycle>,
    ambient: usize,
    rho: i64,
    d: i64,
}

impl Job<'_> {
    fn execute(&self, seed: Seed, runs: usize) -> Result<BulletReport> {
        if runs < 2 {
            return Err(Error::InvalidArgument("at least two runs are needed".into()));
        }
        let nvars = self.ambient + 1;
        let mut parts: Vec<RunParts> = (0..runs).map(|i| self.path.run(seed.run(i as u64))).collect::<Result<_>>()?;
        let mut components = match classify_all(&parts, nvars) {
            Ok(c) => c,
            Err(e) if e.is_genericity() => {
                parts.push(self.path.run(seed.run(runs as u64))?);
                classify_all(&parts, nvars)?
            }
            Err(e) => return Err(e),
        };
        components.sort_by_key(sort_key);

        let total_degree: u64 = components.iter().map(|c| c.degree).sum();
        let bezout_product: u64 = self.inputs.iter().map(|c| c.degree()).product();
        let residual_degree = bezout_product
            .checked_sub(total_degree)
            .ok_or_else(|| Error::Audit(alloc::format!("total degree {} exceeds {}", total_degree, bezout_product)))?;
        if residual_degree != parts[0].residual_degree {
            return Err(Error::Audit(alloc::format!(
                "residual {} disagrees with the run deficit {}",
                residual_degree, parts[0].residual_degree
            )));
        }
        if self.rho >= 0 && residual_degree != 0 && self.inputs.iter().all(|c| c.pure_dim().is_some()) {
            return Err(Error::Audit(alloc::format!("positive residual {} with rho {}", residual_degree, self.rho)));
        }
        for comp in &components {
            if comp.degree == 0 {
                return Err(Error::Audit("component of degree zero".into()));
            }
            let ideals: Vec<&Ideal> = match &comp.chunk {
                Some(ch) => alloc::vec![ch.ideal()],
                None => comp.witnesses.iter().flatten().map(Chunk::ideal).collect(),
            };
            for ideal in ideals {
                for c in &self.inputs {
                    if !support_contained(ideal, &c.support_ideal())? {
                        return Err(Error::Audit("component outside the intersection of supports".into()));
                    }
                }
            }
        }
        Ok(BulletReport {
            ambient: self.ambient,
            inputs: self.inputs.iter().map(|c| summarize(c)).collect(),
            rho: self.rho,
            d: self.d,
            fulton_degree: total_degree,
            total_degree,
            residual_degree,
            bezout_product,
            components,
            seeds: parts.iter().map(|p| p.seed.0).collect(),
            runs: parts.len(),
            run_parts: parts,
        })
    }
}

fn top_dim(c: &Cycle) -> i64 {
    c.dims().last().map_or(-1, |&d| d as i64)
}

/// The •-product of `r ≥ 2` cycles computed on their ruled join.
///
/// Cycles of mixed dimension are expanded multilinearly into their
/// pure-dimensional parts.
pub fn bullet(cycles: &[Cycle], seed: Seed, runs: usize) -> Result<BulletReport> {
    if cycles.len() < 2 {
        return Err(Error::InvalidArgument("the product needs at least two factors".into()));
    }
    let n = cycles[0].ambient();
    for c in cycles {
        if c.ambient() != n {
            return Err(Error::AmbientMismatch(n, c.ambient()));
        }
    }
    let r = cycles.len() as i64;
    let sum_dims: i64 = cycles.iter().map(top_dim).sum();
    // pure parts of every factor, then all combinations
    let parts: Vec<Vec<Cycle>> = cycles.iter().map(|c| c.dims().into_iter().map(|d| c.part(d)).collect()).collect();
    let mut combos: Vec<Vec<Cycle>> = alloc::vec![Vec::new()];
    for p in &parts {
        let mut next = Vec::new();
        for prefix in &combos {
            for c in p {
                let mut v = prefix.clone();
                v.push(c.clone());
                next.push(v);
            }
        }
        combos = next;
    }
    let job = Job {
        path: Path::Join { factors: combos, n },
        inputs: cycles.iter().collect(),
        ambient: n,
        rho: sum_dims - (r - 1) * n as i64,
        d: sum_dims + r - 1,
    };
    job.execute(seed, runs)
}

/// `A • μ` for a linear space `A`, computed by running the procedure in ℙⁿ
/// with the defining forms of `A` as the system.
pub fn bullet_direct_linear(a: &Cycle, c: &Cycle, seed: Seed, runs: usize) -> Result<BulletReport> {
    if a.ambient() != c.ambient() {
        return Err(Error::AmbientMismatch(a.ambient(), c.ambient()));
    }
    let [chunk] = a.chunks() else {
        return Err(Error::InvalidArgument("expected a single linear space".into()));
    };
    let forms = chunk.ideal().gens().to_vec();
    if chunk.coefficient() != 1 || forms.iter().any(|f| !f.is_linear_form()) {
        return Err(Error::InvalidArgument("expected a linear space with coefficient one".into()));
    }
    let n = a.ambient() as i64;
    let system = LinearSystem::new(a.ambient() + 1, forms)?;
    let (da, dc) = (top_dim(a), top_dim(c));
    let job = Job {
        path: Path::Direct { system, target: c },
        inputs: alloc::vec![a, c],
        ambient: a.ambient(),
        rho: da + dc - n,
        d: da + dc + 1,
    };
    job.execute(seed, runs)
}

/// Local intersection numbers `ε_ℓ` at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonTable {
    pub point: ProjPoint,
    /// `values[ℓ]` for `ℓ = 0..=dim V`, `V` the intersection of supports.
    pub values: Vec<u64>,
}

fn chunks_multiplicity(chunks: &[Chunk], ambient: usize, x: &ProjPoint) -> Result<u64> {
    let cyc = Cycle::new(ambient, chunks.to_vec())?;
    multiplicity_at(&cyc, x)
}

/// `ε_ℓ(x)`: multiplicity at `x` of the dimension-`ℓ` part of the product.
/// Moving parts contribute their value on a generic run, which all runs must share.
pub fn epsilon(report: &BulletReport, cycles: &[Cycle], x: &ProjPoint) -> Result<EpsilonTable> {
    if x.ambient_dim() != report.ambient {
        return Err(Error::AmbientMismatch(report.ambient, x.ambient_dim()));
    }
    let nvars = report.ambient + 1;
    let common = cycles.iter().fold(Ideal::zero(nvars), |acc, c| acc.sum(&c.support_ideal()));
    let top = hilbert(&common)?.dim;
    let mut values = alloc::vec![0u64; (top + 1).max(0) as usize];
    for comp in &report.components {
        if comp.dim as i64 > top {
            return Err(Error::Audit("component exceeds the intersection of supports".into()));
        }
        let v = match &comp.chunk {
            Some(ch) => chunks_multiplicity(core::slice::from_ref(ch), report.ambient, x)?,
            None => {
                let per_run: Vec<u64> = comp
                    .witnesses
                    .iter()
                    .map(|w| chunks_multiplicity(w, report.ambient, x))
                    .collect::<Result<_>>()?;
                majority(&per_run).ok_or_else(|| {
                    Error::Instability(alloc::format!("moving multiplicities {:?} at {} disagree", per_run, x))
                })?
            }
        };
        values[comp.dim] += v;
    }
    Ok(EpsilonTable { point: x.clone(), values })
}

/// Runs the product and reads off `ε` at `x`, drawing one extra run when
/// the moving parts disagree at `x`.
pub fn bullet_epsilon(cycles: &[Cycle], x: &ProjPoint, seed: Seed, runs: usize) -> Result<(BulletReport, EpsilonTable)> {
    let report = bullet(cycles, seed, runs)?;
    match epsilon(&report, cycles, x) {
        Ok(table) => Ok((report, table)),
        Err(e) if e.is_genericity() && report.runs == runs => {
            let report = bullet(cycles, seed, runs + 1)?;
            let table = epsilon(&report, cycles, x)?;
            Ok((report, table))
        }
        Err(e) => Err(e),
    }
}

/// The value shared by all runs, or by a strict majority once an extra run
/// has been drawn.
fn majority(values: &[u64]) -> Option<u64> {
    let first = *values.first()?;
    if values.iter().all(|&v| v == first) {
        return Some(first);
    }
    values.iter().copied().find(|v| 2 * values.iter().filter(|&w| w == v).count() > values.len() && values.len() > 2)
}

/// Total degree of the product, summed over all dimensions.
pub fn fulton_degree(report: &BulletReport) -> u64 {
    report.components.iter().map(|c| c.degree).sum()
}
