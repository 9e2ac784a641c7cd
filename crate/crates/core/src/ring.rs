//! The graded hypersurface ring R = k[x_0..x_n]/(f), graded free modules and
//! presentations over it, monomial bases of graded pieces, Hilbert functions,
//! and certification of the isolated-singularity hypothesis.

use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::poly::{parse_polynomial, Grading, Monomial, Polynomial};
use crate::rational::Rat;
use crate::strand::PolyMap;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// R = k[x_0,...,x_n]/(f) with f homogeneous of weighted degree d >= 1.
/// Division by f alone computes canonical representatives, since a single
/// polynomial generates its ideal.
pub struct HypersurfaceRing {
    variables: Vec<String>,
    grading: Grading,
    f: Polynomial,
    lead: Monomial,
    dim: usize,
    degree_of_f: i64,
    basis_cache: RwLock<HashMap<i64, Arc<Vec<Monomial>>>>,
    ambient_cache: RwLock<HashMap<i64, Arc<Vec<Monomial>>>>,
}

impl std::fmt::Debug for HypersurfaceRing {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fm,
            "Q[{}]/({})",
            self.variables.join(","),
            self.f.to_string_with(&self.variables)
        )
    }
}

impl HypersurfaceRing {
    pub fn new(variables: Vec<String>, grading: Grading, f: Polynomial) -> Result<Arc<Self>> {
        if variables.len() != grading.nvars() {
            return Err(Error::InvalidRing(
                "variable list and grading have different lengths".into(),
            ));
        }
        if variables.len() < 2 {
            return Err(Error::InvalidRing(
                "need at least two variables (dim R >= 1)".into(),
            ));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for v in &variables {
                if !seen.insert(v) {
                    return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
                }
            }
        }
        if f.is_zero() {
            return Err(Error::InvalidRing("defining equation is zero".into()));
        }
        let degree_of_f = f.weighted_degree().map_err(|_| {
            Error::InvalidRing("defining equation is not homogeneous".into())
        })?;
        if degree_of_f < 1 {
            return Err(Error::InvalidRing("defining equation has degree < 1".into()));
        }
        let lead = f.leading().expect("nonzero").0.clone();
        Ok(Arc::new(HypersurfaceRing {
            dim: variables.len() - 1,
            variables,
            grading,
            lead,
            degree_of_f,
            f,
            basis_cache: RwLock::new(HashMap::new()),
            ambient_cache: RwLock::new(HashMap::new()),
        }))
    }

    pub fn parse(variables: &[&str], weights: Vec<i64>, f_text: &str) -> Result<Arc<Self>> {
        let grading = Grading::new(weights)?;
        let names: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let f = parse_polynomial(f_text, &grading, &names)?;
        HypersurfaceRing::new(names, grading, f)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn equation(&self) -> &Polynomial {
        &self.f
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.lead
    }

    /// Krull dimension n of R (one less than the number of variables).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Weighted degree d of the defining equation.
    pub fn degree(&self) -> i64 {
        self.degree_of_f
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Max generator weight of the grading; the width of vanishing windows.
    pub fn window_width(&self) -> i64 {
        self.grading.max_weight()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        p.normal_form(&self.f)
    }

    pub fn parse_element(&self, text: &str) -> Result<Polynomial> {
        let p = parse_polynomial(text, &self.grading, &self.variables)?;
        self.normal_form(&p)
    }

    /// Monomial basis of R_l: monomials of weighted degree l not divisible
    /// by the leading monomial of f, in descending monomial order.
    pub fn degree_basis(&self, l: i64) -> Arc<Vec<Monomial>> {
        if let Some(b) = self.basis_cache.read().unwrap().get(&l) {
            return b.clone();
        }
        let mut all = enumerate_monomials(&self.grading, l);
        all.retain(|m| !self.lead.divides(m));
        let arc = Arc::new(all);
        self.basis_cache.write().unwrap().insert(l, arc.clone());
        arc
    }

    /// Monomial basis of the ambient polynomial ring piece T_l.
    pub fn ambient_basis(&self, l: i64) -> Arc<Vec<Monomial>> {
        if let Some(b) = self.ambient_cache.read().unwrap().get(&l) {
            return b.clone();
        }
        let arc = Arc::new(enumerate_monomials(&self.grading, l));
        self.ambient_cache.write().unwrap().insert(l, arc.clone());
        arc
    }

    pub fn dim_degree(&self, l: i64) -> usize {
        self.degree_basis(l).len()
    }

    pub fn partial_derivative(&self, p: &Polynomial, var: usize) -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .filter(|(m, _)| m.exps()[var] > 0)
            .map(|(m, c)| {
                let e = m.exps()[var];
                let mut exps = m.exps().to_vec();
                exps[var] -= 1;
                (Monomial::new(exps), c * Rat::from_integer(e.into()))
            })
            .collect();
        Polynomial::from_terms(self.grading.clone(), terms)
    }
}

/// All monomials of weighted degree l, descending in the fixed order.
fn enumerate_monomials(grading: &Grading, l: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if l < 0 {
        return out;
    }
    let n = grading.nvars();
    let mut exps = vec![0u32; n];
    fn rec(
        grading: &Grading,
        var: usize,
        remaining: i64,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        let n = grading.nvars();
        if var == n {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let w = grading.weights()[var];
        if var == n - 1 {
            if remaining % w == 0 {
                exps[var] = (remaining / w) as u32;
                rec(grading, var + 1, 0, exps, out);
                exps[var] = 0;
            }
            return;
        }
        let max = remaining / w;
        for e in 0..=max {
            exps[var] = e as u32;
            rec(grading, var + 1, remaining - e * w, exps, out);
        }
        exps[var] = 0;
    }
    rec(grading, 0, l, &mut exps, &mut out);
    out.sort_by(|a, b| crate::poly::MonomialOrder::cmp(grading, b, a));
    out
}

// ---------------------------------------------------------------------------
// Graded free modules and presentations
// ---------------------------------------------------------------------------

/// A graded free module given by its generator twists; generator i
/// contributes t^{deg_i} to the Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    degrees: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<i64>) -> Self {
        GradedFreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }
}

/// A finitely generated graded module encoded as a presentation
/// coker(F1 -> F0). Entries are kept in normal form modulo f, and entry
/// (i, j) is homogeneous of degree deg(F1_j) - deg(F0_i) or zero.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    name: String,
    ring: Arc<HypersurfaceRing>,
    map: PolyMap,
}

impl ModulePresentation {
    /// Builds from relation columns (each column is a vector over the F0
    /// generators). Column degrees are derived from any nonzero entry and
    /// checked for consistency; `explicit_f1` pins them when a column is
    /// zero or ambiguity must be resolved.
    pub fn new(
        ring: Arc<HypersurfaceRing>,
        name: impl Into<String>,
        f0_degrees: Vec<i64>,
        columns: Vec<Vec<Polynomial>>,
        explicit_f1: Option<Vec<i64>>,
    ) -> Result<Self> {
        if f0_degrees.is_empty() {
            return Err(Error::InvalidPresentation(
                "a presentation needs at least one generator".into(),
            ));
        }
        let mut normalized: Vec<Vec<Polynomial>> = Vec::with_capacity(columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != f0_degrees.len() {
                return Err(Error::InvalidPresentation(format!(
                    "relation column {j} has {} entries, expected {}",
                    col.len(),
                    f0_degrees.len()
                )));
            }
            normalized.push(
                col.iter()
                    .map(|p| ring.normal_form(p))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let f1_degrees = match explicit_f1 {
            Some(d) => {
                if d.len() != normalized.len() {
                    return Err(Error::InvalidPresentation(
                        "explicit relation degrees have wrong length".into(),
                    ));
                }
                d
            }
            None => {
                let mut d = Vec::with_capacity(normalized.len());
                for (j, col) in normalized.iter().enumerate() {
                    let mut derived = None;
                    for (i, p) in col.iter().enumerate() {
                        if !p.is_zero() {
                            derived = Some(f0_degrees[i] + p.weighted_degree()?);
                            break;
                        }
                    }
                    d.push(derived.ok_or_else(|| {
                        Error::InvalidPresentation(format!(
                            "relation column {j} is zero; give its degree explicitly"
                        ))
                    })?);
                }
                d
            }
        };
        // Row-major entry table.
        let rows = f0_degrees.len();
        let cols = normalized.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for col in normalized.iter() {
                entries.push(col[i].clone());
            }
        }
        let map = PolyMap::new(ring.clone(), f0_degrees, f1_degrees, entries)?;
        Ok(ModulePresentation {
            name: name.into(),
            ring,
            map,
        })
    }

    /// Parses relation columns from polynomial strings.
    pub fn parse(
        ring: &Arc<HypersurfaceRing>,
        name: impl Into<String>,
        f0_degrees: Vec<i64>,
        columns: &[Vec<&str>],
    ) -> Result<Self> {
        let parsed = columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|s| {
                        parse_polynomial(s, ring.grading(), ring.variables())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ModulePresentation::new(ring.clone(), name, f0_degrees, parsed, None)
    }

    /// The cyclic module R/(g_1,...,g_k) with generator in degree 0.
    pub fn cyclic(
        ring: &Arc<HypersurfaceRing>,
        name: impl Into<String>,
        generators: &[&str],
    ) -> Result<Self> {
        let columns: Vec<Vec<&str>> = generators.iter().map(|g| vec![*g]).collect();
        ModulePresentation::parse(ring, name, vec![0], &columns)
    }

    /// The free module on the given generator degrees (no relations).
    pub fn free(
        ring: &Arc<HypersurfaceRing>,
        name: impl Into<String>,
        degrees: Vec<i64>,
    ) -> Result<Self> {
        ModulePresentation::new(ring.clone(), name, degrees, Vec::new(), Some(Vec::new()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<HypersurfaceRing> {
        &self.ring
    }

    pub fn f0(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.map.row_degrees().to_vec())
    }

    pub fn f1(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.map.col_degrees().to_vec())
    }

    pub fn presentation_map(&self) -> &PolyMap {
        &self.map
    }

    pub fn max_gen_degree(&self) -> i64 {
        *self.map.row_degrees().iter().max().expect("nonempty")
    }

    pub fn min_gen_degree(&self) -> i64 {
        *self.map.row_degrees().iter().min().expect("nonempty")
    }

    /// The twist M(-j): every generator and relation degree shifts by j.
    pub fn twist(&self, j: i64) -> ModulePresentation {
        ModulePresentation {
            name: format!("{}(-{})", self.name, j),
            ring: self.ring.clone(),
            map: self.map.twist(j),
        }
    }

    /// Block-diagonal direct sum presentation.
    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<ModulePresentation> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::InvalidPresentation(
                "direct sum of modules over different rings".into(),
            ));
        }
        let mut f0 = self.map.row_degrees().to_vec();
        f0.extend_from_slice(other.map.row_degrees());
        let mut f1 = self.map.col_degrees().to_vec();
        f1.extend_from_slice(other.map.col_degrees());
        let zero = Polynomial::zero(self.ring.grading().clone());
        let (r1, c1) = (self.map.nrows(), self.map.ncols());
        let (r2, c2) = (other.map.nrows(), other.map.ncols());
        let mut entries = vec![zero; (r1 + r2) * (c1 + c2)];
        for i in 0..r1 {
            for j in 0..c1 {
                entries[i * (c1 + c2) + j] = self.map.entry(i, j).clone();
            }
        }
        for i in 0..r2 {
            for j in 0..c2 {
                entries[(r1 + i) * (c1 + c2) + c1 + j] = other.map.entry(i, j).clone();
            }
        }
        let map = PolyMap::new(self.ring.clone(), f0, f1, entries)?;
        Ok(ModulePresentation {
            name: format!("{}+{}", self.name, other.name),
            ring: self.ring.clone(),
            map,
        })
    }

    /// dim_k M_l = dim (F0)_l - rank of the presentation strand in degree l.
    pub fn hilbert_value(&self, l: i64) -> i64 {
        let f0_dim: usize = self
            .map
            .row_degrees()
            .iter()
            .map(|&d| self.ring.dim_degree(l - d))
            .sum();
        let rank = self.map.strand_sparse(l).rank();
        f0_dim as i64 - rank as i64
    }

    pub fn hilbert_function(&self, lo: i64, hi: i64) -> HilbertFunction {
        let values = (lo..=hi).map(|l| self.hilbert_value(l)).collect();
        HilbertFunction::new(lo, values)
    }
}

// ---------------------------------------------------------------------------
// Hilbert functions and vanishing-tail certification
// ---------------------------------------------------------------------------

/// Exact values dim_k M_l on a computed degree range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    lo: i64,
    values: Vec<i64>,
}

impl HilbertFunction {
    pub fn new(lo: i64, values: Vec<i64>) -> Self {
        assert!(values.iter().all(|&v| v >= 0), "negative Hilbert value");
        HilbertFunction { lo, values }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    /// Exact value when l lies in the computed range.
    pub fn get(&self, l: i64) -> Option<i64> {
        if l < self.lo || l > self.hi() {
            None
        } else {
            Some(self.values[(l - self.lo) as usize])
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn last_nonzero(&self) -> Option<i64> {
        (self.lo..=self.hi()).rev().find(|&l| self.get(l) != Some(0))
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// A certified statement that the Hilbert function vanishes from
/// `from_degree` on. Sound because a module generated in degrees
/// < from_degree over a ring generated in degrees <= w satisfies
/// M_l = sum_i x_i M_{l-e_i} for l >= from_degree, so w consecutive zeros
/// force all later values to zero.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TailCertificate {
    pub from_degree: i64,
    pub window: i64,
    pub generator_bound: i64,
}

#[derive(Clone, Debug)]
pub enum TailCheck {
    Certified(TailCertificate),
    Inconclusive(String),
}

/// Checks the vanishing window; `gen_bound` must bound every generator
/// degree of the module whose Hilbert function this is.
pub fn certify_vanishing_tail(
    h: &HilbertFunction,
    from_degree: i64,
    gen_bound: i64,
    window: i64,
) -> Result<TailCheck> {
    if from_degree + window - 1 > h.hi() || from_degree < h.lo() {
        return Err(Error::Inconclusive(format!(
            "range too small: need values on [{}, {}], have [{}, {}]",
            from_degree,
            from_degree + window - 1,
            h.lo(),
            h.hi()
        )));
    }
    if from_degree <= gen_bound {
        return Ok(TailCheck::Inconclusive(format!(
            "from_degree {} does not exceed the generator bound {}",
            from_degree, gen_bound
        )));
    }
    for l in from_degree..from_degree + window {
        if h.get(l) != Some(0) {
            return Ok(TailCheck::Inconclusive(format!(
                "nonzero value {} at degree {}",
                h.get(l).unwrap(),
                l
            )));
        }
    }
    Ok(TailCheck::Certified(TailCertificate {
        from_degree,
        window,
        generator_bound: gen_bound,
    }))
}

// ---------------------------------------------------------------------------
// Isolated-singularity certification
// ---------------------------------------------------------------------------

/// Result of checking finite-dimensionality of the Jacobian ring
/// T/(f, df/dx_0, ..., df/dx_n), which is equivalent to Proj R being
/// smooth away from the irrelevant maximal ideal.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub enum SingularityReport {
    Certified {
        /// Total k-dimension of the Jacobian ring (Milnor-type number).
        jacobian_dimension: i64,
        /// All graded pieces vanish from this degree on.
        vanishing_from: i64,
    },
    NotCertifiedWithinBound {
        degree_budget: i64,
    },
}

impl SingularityReport {
    pub fn is_certified(&self) -> bool {
        matches!(self, SingularityReport::Certified { .. })
    }
}

/// Computes the Hilbert function of the Jacobian ring degree by degree and
/// certifies finite dimension via the vanishing-tail window. The Jacobian
/// ring is cyclic (generated in degree 0), so the window argument applies
/// unconditionally.
pub fn check_isolated_singularity(
    ring: &HypersurfaceRing,
    degree_budget: i64,
) -> SingularityReport {
    let mut gens: Vec<Polynomial> = vec![ring.equation().clone()];
    for i in 0..ring.nvars() {
        let p = ring.partial_derivative(ring.equation(), i);
        if !p.is_zero() {
            gens.push(p);
        }
    }
    let window = ring.window_width();
    let mut values: Vec<i64> = Vec::new();
    let mut total: i64 = 0;
    for l in 0..=degree_budget {
        let dim = jacobian_piece_dim(ring, &gens, l);
        values.push(dim);
        total += dim;
        // check for a full window of zeros ending at l
        if l + 1 >= window && values[(l + 1 - window) as usize..].iter().all(|&v| v == 0) {
            let h = HilbertFunction::new(0, values);
            let from = l + 1 - window;
            match certify_vanishing_tail(&h, from.max(1), 0, window) {
                Ok(TailCheck::Certified(_)) => {
                    return SingularityReport::Certified {
                        jacobian_dimension: total,
                        vanishing_from: from.max(1),
                    };
                }
                _ => unreachable!("window of zeros was just observed"),
            }
        }
    }
    SingularityReport::NotCertifiedWithinBound { degree_budget }
}

/// dim of the degree-l piece of T/(gens): ambient dimension minus the rank
/// of the span of all monomial multiples of the generators in degree l.
fn jacobian_piece_dim(ring: &HypersurfaceRing, gens: &[Polynomial], l: i64) -> i64 {
    let ambient = ring.ambient_basis(l);
    if ambient.is_empty() {
        return 0;
    }
    let index: HashMap<&Monomial, u32> = ambient
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i as u32))
        .collect();
    let mut mat = SparseMat::new(ambient.len());
    for g in gens {
        let dg = g.weighted_degree().expect("nonzero homogeneous generator");
        for m in ring.ambient_basis(l - dg).iter() {
            let prod = g.mul_term(m, &Rat::from_integer(1.into()));
            let col: Vec<(u32, Rat)> = prod
                .terms()
                .iter()
                .map(|(mm, c)| (index[mm], c.clone()))
                .collect();
            mat.push_col_rat(&col);
        }
    }
    ambient.len() as i64 - mat.rank() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_ring() -> Arc<HypersurfaceRing> {
        HypersurfaceRing::parse(&["x", "y"], vec![1, 1], "x*y").unwrap()
    }

    fn quadric() -> Arc<HypersurfaceRing> {
        HypersurfaceRing::parse(&["x", "y", "u", "v"], vec![1, 1, 1, 1], "x*u + y*v").unwrap()
    }

    #[test]
    fn degree_basis_examples() {
        let r = xy_ring();
        let b = r.degree_basis(2);
        assert_eq!(b.len(), 2); // x^2, y^2 once xy is dropped
        assert_eq!(r.degree_basis(0).len(), 1);

        let q = quadric();
        assert_eq!(q.dim_degree(2), 9); // C(5,3) - C(3,3)
    }

    #[test]
    fn standard_grading_dimension_formula() {
        let q = quadric();
        let n = q.dim() as i64;
        let d = q.degree();
        for l in 0..10 {
            let expect = crate::rational::binomial(l + n, n)
                - crate::rational::binomial(l - d + n, n);
            assert_eq!(
                num_traits::ToPrimitive::to_i64(&expect).unwrap(),
                q.dim_degree(l) as i64,
                "degree {l}"
            );
        }
    }

    #[test]
    fn hilbert_of_hyperplane_quotient() {
        let r = xy_ring();
        let m = ModulePresentation::cyclic(&r, "M", &["x"]).unwrap();
        let h = m.hilbert_function(0, 6);
        assert_eq!(h.values(), &[1, 1, 1, 1, 1, 1, 1]); // R/(x) = Q[y]
    }

    #[test]
    fn hilbert_of_free_and_residue_field() {
        let q = quadric();
        let free = ModulePresentation::free(&q, "R", vec![0]).unwrap();
        let h = free.hilbert_function(0, 2);
        assert_eq!(h.values(), &[1, 4, 9]);

        let k = ModulePresentation::cyclic(&q, "k", &["x", "y", "u", "v"]).unwrap();
        let h = k.hilbert_function(0, 3);
        assert_eq!(h.values(), &[1, 0, 0, 0]);
    }

    #[test]
    fn twist_shifts_hilbert_function() {
        let q = quadric();
        let m = ModulePresentation::cyclic(&q, "M", &["x", "y"]).unwrap();
        let h = m.hilbert_function(0, 5);
        let ht = m.twist(2).hilbert_function(2, 7);
        for l in 0..=5 {
            assert_eq!(h.get(l), ht.get(l + 2));
        }
    }

    #[test]
    fn vanishing_tail_certificates() {
        // residue field over the xy ring: values 1, 0 from degree 0
        let r = xy_ring();
        let k = ModulePresentation::cyclic(&r, "k", &["x", "y"]).unwrap();
        let h = k.hilbert_function(0, 3);
        match certify_vanishing_tail(&h, 1, 0, 1).unwrap() {
            TailCheck::Certified(c) => assert_eq!(c.from_degree, 1),
            other => panic!("expected certificate, got {other:?}"),
        }

        // Q[y] never vanishes
        let m = ModulePresentation::cyclic(&r, "M", &["x"]).unwrap();
        let h = m.hilbert_function(0, 6);
        assert!(matches!(
            certify_vanishing_tail(&h, 3, 0, 1).unwrap(),
            TailCheck::Inconclusive(_)
        ));

        // range too small
        assert!(certify_vanishing_tail(&h, 6, 0, 3).is_err());
    }

    #[test]
    fn isolated_singularity_checks() {
        // quadric: Jacobian ideal contains all variables, total dimension 1
        let q = quadric();
        match check_isolated_singularity(&q, 20) {
            SingularityReport::Certified {
                jacobian_dimension, ..
            } => assert_eq!(jacobian_dimension, 1),
            other => panic!("expected certification, got {other:?}"),
        }

        // Fermat cubic surface ring
        let fermat =
            HypersurfaceRing::parse(&["x", "y", "z"], vec![1, 1, 1], "x^3 + y^3 + z^3").unwrap();
        assert!(check_isolated_singularity(&fermat, 20).is_certified());

        // xyz: non-isolated, never certifies
        let xyz = HypersurfaceRing::parse(&["x", "y", "z"], vec![1, 1, 1], "x*y*z").unwrap();
        assert!(!check_isolated_singularity(&xyz, 20).is_certified());
    }

    #[test]
    fn presentation_validation() {
        let q = quadric();
        // inconsistent entry degrees within one column
        let g = q.grading().clone();
        let vars = q.variables().to_vec();
        let col = vec![
            parse_polynomial("x", &g, &vars).unwrap(),
            parse_polynomial("x^2", &g, &vars).unwrap(),
        ];
        assert!(ModulePresentation::new(q.clone(), "bad", vec![0, 0], vec![col], None).is_err());
    }

    #[test]
    fn direct_sum_hilbert_additivity() {
        let q = quadric();
        let a = ModulePresentation::cyclic(&q, "A", &["x", "y"]).unwrap();
        let b = ModulePresentation::cyclic(&q, "B", &["x", "v"]).unwrap();
        let s = a.direct_sum(&b).unwrap();
        for l in 0..5 {
            assert_eq!(
                s.hilbert_value(l),
                a.hilbert_value(l) + b.hilbert_value(l)
            );
        }
    }
}
