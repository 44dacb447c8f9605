//! n-periodic complexes and their homotopy category. At `n = 1` these
//! are differential modules: a module with a square-zero endomorphism.
//!
//! Two flavors exist side by side: complexes of formal projectives
//! ([`ProjPeriodic`]), which support minimization and the decision
//! procedures, and complexes of representations ([`RepPeriodic`]) for
//! homology and quasi-isomorphism checks. Position indices run
//! `0..n` and all differential indices are mod `n`:
//! `diffs[i]: terms[i] -> terms[(i+1) % n]`.
//!
//! The suspension rotates positions by one and negates every
//! differential; at `n = 1` it is `(M, eps) -> (M, -eps)` and squares to
//! the literal identity.

mod decide;
mod minimize;

pub use decide::{
    end_kn, indecomposable_kn, iso_cn, iso_kn, EndAlgebra, IndecVerdict, IsoObstruction,
    IsoVerdict, SearchParams, SearchReport,
};
pub use minimize::{minimize_periodic, verify_periodic_equivalence, PeriodicMinWitness};

use crate::exactlin::Matrix;
use crate::homspace::{quotient_representatives, MapSpace, ProductSpace};
use crate::quiver::PathAlgebra;
use crate::repmod::{
    eval_proj, eval_projmap, kernel_image, quotient_with_section, ProjMap, ProjModule, RepMap,
    Representation,
};
use crate::{Error, Result};

/// n-periodic complex of formal projectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPeriodic {
    pub terms: Vec<ProjModule>,
    pub diffs: Vec<ProjMap>,
}

impl ProjPeriodic {
    /// Validates `d ∘ d = 0` at every position (at `n = 1`, the square
    /// of the differential).
    pub fn new(alg: &PathAlgebra, terms: Vec<ProjModule>, diffs: Vec<ProjMap>) -> Result<Self> {
        let n = terms.len();
        assert!(n >= 1, "period must be positive");
        assert_eq!(diffs.len(), n, "one differential per position");
        for (i, d) in diffs.iter().enumerate() {
            assert_eq!(d.source, terms[i], "differential source mismatch");
            assert_eq!(d.target, terms[(i + 1) % n], "differential target mismatch");
        }
        for i in 0..n {
            let sq = diffs[(i + 1) % n].compose(alg, &diffs[i]);
            if !sq.is_zero() {
                return Err(Error::NotAComplex { position: format!("position {i}") });
            }
        }
        Ok(ProjPeriodic { terms, diffs })
    }

    /// Differential module `(P, eps)`.
    pub fn differential_module(alg: &PathAlgebra, module: ProjModule, eps: ProjMap) -> Result<Self> {
        ProjPeriodic::new(alg, vec![module], vec![eps])
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn zero(n: usize) -> Self {
        ProjPeriodic {
            terms: vec![ProjModule::empty(); n],
            diffs: (0..n).map(|_| ProjMap::zero(ProjModule::empty(), ProjModule::empty())).collect(),
        }
    }

    pub fn is_zero_object(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    pub fn total_summands(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// Suspension: rotate positions by one, negate all differentials.
    /// Applying it `2n` times returns the input literally.
    pub fn shift(&self, alg: &PathAlgebra) -> ProjPeriodic {
        let n = self.n();
        let terms = (0..n).map(|i| self.terms[(i + 1) % n].clone()).collect();
        let diffs = (0..n).map(|i| self.diffs[(i + 1) % n].neg(alg)).collect();
        ProjPeriodic { terms, diffs }
    }

    pub fn eval(&self, alg: &PathAlgebra) -> RepPeriodic {
        RepPeriodic {
            terms: self.terms.iter().map(|t| eval_proj(alg, t)).collect(),
            diffs: self.diffs.iter().map(|d| eval_projmap(alg, d)).collect(),
        }
    }

    pub fn is_minimal(&self, alg: &PathAlgebra) -> bool {
        self.diffs.iter().all(|d| d.is_radical(alg))
    }
}

/// Morphism of n-periodic complexes of projectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPeriodicMap {
    pub source: ProjPeriodic,
    pub target: ProjPeriodic,
    pub comps: Vec<ProjMap>,
}

impl ProjPeriodicMap {
    pub fn zero(source: &ProjPeriodic, target: &ProjPeriodic) -> Self {
        let comps = (0..source.n())
            .map(|i| ProjMap::zero(source.terms[i].clone(), target.terms[i].clone()))
            .collect();
        ProjPeriodicMap { source: source.clone(), target: target.clone(), comps }
    }

    pub fn identity(alg: &PathAlgebra, x: &ProjPeriodic) -> Self {
        let comps = x.terms.iter().map(|t| ProjMap::identity(alg, t)).collect();
        ProjPeriodicMap { source: x.clone(), target: x.clone(), comps }
    }

    pub fn new(source: ProjPeriodic, target: ProjPeriodic, comps: Vec<ProjMap>) -> Self {
        ProjPeriodicMap { source, target, comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn is_chain_map(&self, alg: &PathAlgebra) -> bool {
        let n = self.source.n();
        (0..n).all(|i| {
            let lhs = self.target.diffs[i].compose(alg, &self.comps[i]);
            let rhs = self.comps[(i + 1) % n].compose(alg, &self.source.diffs[i]);
            lhs.sub(alg, &rhs).is_zero()
        })
    }

    pub fn compose(&self, alg: &PathAlgebra, first: &ProjPeriodicMap) -> ProjPeriodicMap {
        let comps = (0..first.source.n())
            .map(|i| self.comps[i].compose(alg, &first.comps[i]))
            .collect();
        ProjPeriodicMap { source: first.source.clone(), target: self.target.clone(), comps }
    }

    pub fn add(&self, alg: &PathAlgebra, other: &ProjPeriodicMap) -> ProjPeriodicMap {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(alg, b)).collect();
        ProjPeriodicMap { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn sub(&self, alg: &PathAlgebra, other: &ProjPeriodicMap) -> ProjPeriodicMap {
        self.add(alg, &other.neg(alg))
    }

    pub fn neg(&self, alg: &PathAlgebra) -> ProjPeriodicMap {
        ProjPeriodicMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|c| c.neg(alg)).collect(),
        }
    }

    /// The same components viewed as a map `ΣX -> ΣY`; the suspension
    /// acts trivially on morphisms.
    pub fn shift(&self, alg: &PathAlgebra) -> ProjPeriodicMap {
        let n = self.source.n();
        let comps = (0..n).map(|i| self.comps[(i + 1) % n].clone()).collect();
        ProjPeriodicMap {
            source: self.source.shift(alg),
            target: self.target.shift(alg),
            comps,
        }
    }

    /// Componentwise evaluation is invertible at every vertex.
    pub fn is_iso(&self, alg: &PathAlgebra) -> bool {
        self.comps.iter().all(|c| eval_projmap(alg, c).is_iso())
    }
}

/// Null-homotopy witness: `comps[i]: X^i -> Y^{(i-1) mod n}` with
/// `f = s d + d s` componentwise.
#[derive(Debug, Clone)]
pub struct PeriodicHomotopy {
    pub comps: Vec<ProjMap>,
}

/// Mapping cone of `f: X -> Y`: position `i` is `X^{i+1} ⊕ Y^i` with
/// differential `[[-d_X, 0], [f, d_Y]]`.
pub fn cone_periodic(alg: &PathAlgebra, f: &ProjPeriodicMap) -> Result<ProjPeriodic> {
    let x = &f.source;
    let y = &f.target;
    let n = x.n();
    assert_eq!(n, y.n(), "periods must agree");
    let terms: Vec<ProjModule> = (0..n).map(|i| x.terms[(i + 1) % n].concat(&y.terms[i])).collect();
    let mut diffs = Vec::new();
    for i in 0..n {
        let xs = x.terms[(i + 1) % n].clone();
        let ys = y.terms[i].clone();
        let xt = x.terms[(i + 2) % n].clone();
        let yt = y.terms[(i + 1) % n].clone();
        let dx = x.diffs[(i + 1) % n].neg(alg);
        let fc = f.comps[(i + 1) % n].clone();
        let dy = y.diffs[i].clone();
        let zero = ProjMap::zero(ys.clone(), xt.clone());
        diffs.push(ProjMap::block(
            alg,
            &[xs, ys],
            &[xt, yt],
            &[vec![Some(&dx), Some(&zero)], vec![Some(&fc), Some(&dy)]],
        ));
    }
    ProjPeriodic::new(alg, terms, diffs)
}

/// Canonical inclusion `Y -> C_f`.
pub fn cone_inclusion(alg: &PathAlgebra, f: &ProjPeriodicMap, cone: &ProjPeriodic) -> ProjPeriodicMap {
    let y = &f.target;
    let n = y.n();
    let comps = (0..n)
        .map(|i| {
            let mut m = ProjMap::zero(y.terms[i].clone(), cone.terms[i].clone());
            let off = f.source.terms[(i + 1) % n].len();
            for (k, &v) in y.terms[i].summands.iter().enumerate() {
                m.set(off + k, k, alg.elem_unit(v));
            }
            m
        })
        .collect();
    ProjPeriodicMap { source: y.clone(), target: cone.clone(), comps }
}

/// Canonical projection `C_f -> ΣX`.
pub fn cone_projection(alg: &PathAlgebra, f: &ProjPeriodicMap, cone: &ProjPeriodic) -> ProjPeriodicMap {
    let sx = f.source.shift(alg);
    let n = sx.n();
    let comps = (0..n)
        .map(|i| {
            let mut m = ProjMap::zero(cone.terms[i].clone(), sx.terms[i].clone());
            for (k, &v) in sx.terms[i].summands.iter().enumerate() {
                m.set(k, k, alg.elem_unit(v));
            }
            m
        })
        .collect();
    ProjPeriodicMap { source: cone.clone(), target: sx, comps }
}

/// n-periodic complex of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepPeriodic {
    pub terms: Vec<Representation>,
    pub diffs: Vec<RepMap>,
}

impl RepPeriodic {
    pub fn new(alg: &PathAlgebra, terms: Vec<Representation>, diffs: Vec<RepMap>) -> Result<Self> {
        let n = terms.len();
        assert!(n >= 1);
        assert_eq!(diffs.len(), n);
        for i in 0..n {
            if !diffs[i].commutes(alg) {
                return Err(Error::Invalid(format!("differential at position {i} is not a morphism")));
            }
            let sq = diffs[(i + 1) % n].compose(&diffs[i]);
            if !sq.is_zero() {
                return Err(Error::NotAComplex { position: format!("position {i}") });
            }
        }
        Ok(RepPeriodic { terms, diffs })
    }

    /// Stalk object `(M, 0)` at period one.
    pub fn stalk(alg: &PathAlgebra, m: &Representation) -> Self {
        RepPeriodic { terms: vec![m.clone()], diffs: vec![RepMap::zero(alg, m, m)] }
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn shift(&self) -> RepPeriodic {
        let n = self.n();
        RepPeriodic {
            terms: (0..n).map(|i| self.terms[(i + 1) % n].clone()).collect(),
            diffs: (0..n).map(|i| self.diffs[(i + 1) % n].neg()).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(|t| t.total_dim()).sum()
    }
}

/// Morphism of rep-flavor periodic complexes.
#[derive(Debug, Clone)]
pub struct RepPeriodicMap {
    pub source: RepPeriodic,
    pub target: RepPeriodic,
    pub comps: Vec<RepMap>,
}

impl RepPeriodicMap {
    pub fn new(source: RepPeriodic, target: RepPeriodic, comps: Vec<RepMap>) -> Self {
        RepPeriodicMap { source, target, comps }
    }

    pub fn is_chain_map(&self, alg: &PathAlgebra) -> bool {
        let n = self.source.n();
        (0..n).all(|i| {
            self.comps[i].commutes(alg)
                && self.target.diffs[i]
                    .compose(&self.comps[i])
                    .sub(&self.comps[(i + 1) % n].compose(&self.source.diffs[i]))
                    .is_zero()
        })
    }
}

/// Homology data at one position: the subquotient representation with
/// the kernel inclusion and the projection from the kernel.
#[derive(Debug, Clone)]
pub struct HomologyAt {
    pub rep: Representation,
    pub cycle_incl: RepMap,
    pub proj_from_cycles: RepMap,
    pub section: Vec<Matrix>,
}

/// `H^i = ker d^i / im d^{i-1}` with explicit bases at every position.
pub fn homology_rep(alg: &PathAlgebra, x: &RepPeriodic) -> Vec<HomologyAt> {
    let n = x.n();
    (0..n)
        .map(|i| {
            let ((_, ker_incl), _) = kernel_image(alg, &x.diffs[i]);
            let (_, (im, im_incl)) = kernel_image(alg, &x.diffs[(i + n - 1) % n]);
            // express the image inside the kernel
            let blocks: Vec<Matrix> = (0..alg.quiver.num_vertices())
                .map(|v| {
                    if ker_incl.blocks[v].cols() == 0 {
                        Matrix::zero(alg.field, 0, im_incl.blocks[v].cols())
                    } else {
                        ker_incl.blocks[v]
                            .solve(&im_incl.blocks[v])
                            .expect("shape ok")
                            .expect("image lies in the kernel")
                            .particular
                    }
                })
                .collect();
            let incl = RepMap::new(im.clone(), ker_incl.source.clone(), blocks);
            let q = quotient_with_section(alg, &incl);
            HomologyAt {
                rep: q.rep,
                cycle_incl: ker_incl,
                proj_from_cycles: q.proj,
                section: q.section,
            }
        })
        .collect()
}

/// Total dimension of homology across all positions.
pub fn homology_total_dim(alg: &PathAlgebra, x: &RepPeriodic) -> usize {
    homology_rep(alg, x).iter().map(|h| h.rep.total_dim()).sum()
}

/// A chain map is a quasi-isomorphism when the induced map on homology
/// is invertible at every position.
pub fn quasi_iso(alg: &PathAlgebra, f: &RepPeriodicMap) -> bool {
    let hx = homology_rep(alg, &f.source);
    let hy = homology_rep(alg, &f.target);
    let n = f.source.n();
    for i in 0..n {
        if hx[i].rep.dims != hy[i].rep.dims {
            return false;
        }
        for v in 0..alg.quiver.num_vertices() {
            // H(X) -> H(Y): section to cycles of X, push through f,
            // re-express in Y-cycles, project
            let to_cycles = &hx[i].section[v];
            let pushed = f.comps[i].blocks[v].mul(&hx[i].cycle_incl.blocks[v]).mul(to_cycles);
            let in_y_cycles = if hy[i].cycle_incl.blocks[v].cols() == 0 {
                Matrix::zero(alg.field, 0, pushed.cols())
            } else {
                match hy[i].cycle_incl.blocks[v].solve(&pushed) {
                    Ok(Some(sol)) => sol.particular,
                    _ => return false,
                }
            };
            let induced = hy[i].proj_from_cycles.blocks[v].mul(&in_y_cycles);
            if !induced.is_invertible() {
                return false;
            }
        }
    }
    true
}

/// The coordinate spaces and the chain-condition kernel for maps
/// `X -> Y`: columns of the returned matrix are a basis of the space of
/// chain maps, in the coordinates of the returned product space.
pub fn chain_map_space(alg: &PathAlgebra, x: &ProjPeriodic, y: &ProjPeriodic) -> (ProductSpace, Matrix) {
    let n = x.n();
    let f_space = ProductSpace::new(
        (0..n).map(|i| MapSpace::new(alg, &x.terms[i], &y.terms[i])).collect(),
    );
    let cond_space = ProductSpace::new(
        (0..n).map(|i| MapSpace::new(alg, &x.terms[i], &y.terms[(i + 1) % n])).collect(),
    );
    let mut blocks = Vec::new();
    for i in 0..n {
        let dy = y.diffs[i].clone();
        blocks.push((i, i, f_space.factors[i].operator(alg, &cond_space.factors[i], |m| dy.compose(alg, m))));
        let dx = x.diffs[i].clone();
        blocks.push((
            i,
            (i + 1) % n,
            f_space.factors[(i + 1) % n]
                .operator(alg, &cond_space.factors[i], |m| m.compose(alg, &dx).neg(alg)),
        ));
    }
    let l = ProductSpace::assemble(alg.field, &cond_space, &f_space, &blocks);
    let kernel = l.nullspace();
    (f_space, kernel)
}

/// Coordinate space of homotopies `s^i: X^i -> Y^{i-1}` and the matrix
/// of `s -> d s + s d` into chain-map coordinates.
pub fn homotopy_operator(alg: &PathAlgebra, x: &ProjPeriodic, y: &ProjPeriodic) -> (ProductSpace, Matrix) {
    let n = x.n();
    let f_space = ProductSpace::new(
        (0..n).map(|i| MapSpace::new(alg, &x.terms[i], &y.terms[i])).collect(),
    );
    let s_space = ProductSpace::new(
        (0..n).map(|i| MapSpace::new(alg, &x.terms[i], &y.terms[(i + n - 1) % n])).collect(),
    );
    let mut blocks = Vec::new();
    for i in 0..n {
        let dy = y.diffs[(i + n - 1) % n].clone();
        blocks.push((i, i, s_space.factors[i].operator(alg, &f_space.factors[i], |m| dy.compose(alg, m))));
        let dx = x.diffs[i].clone();
        blocks.push((
            i,
            (i + 1) % n,
            s_space.factors[(i + 1) % n].operator(alg, &f_space.factors[i], |m| m.compose(alg, &dx)),
        ));
    }
    let b = ProductSpace::assemble(alg.field, &f_space, &s_space, &blocks);
    (s_space, b)
}

/// Solve `f = s d + d s`; `None` means no homotopy exists (a meaningful
/// verdict, not an error).
pub fn null_homotopy(alg: &PathAlgebra, f: &ProjPeriodicMap) -> Option<PeriodicHomotopy> {
    let (s_space, b) = homotopy_operator(alg, &f.source, &f.target);
    let f_space = ProductSpace::new(
        (0..f.source.n())
            .map(|i| MapSpace::new(alg, &f.source.terms[i], &f.target.terms[i]))
            .collect(),
    );
    let fv = f_space.to_vec(alg, &f.comps);
    let rhs = Matrix::from_fn(alg.field, fv.len(), 1, |r, _| fv[r].clone());
    let sol = b.solve(&rhs).expect("shapes agree")?;
    let comps = s_space.from_column(alg, &sol.particular, 0);
    Some(PeriodicHomotopy { comps })
}

/// Verify a homotopy witness bit-exactly.
pub fn homotopy_witnesses_f(
    alg: &PathAlgebra,
    f: &ProjPeriodicMap,
    s: &PeriodicHomotopy,
) -> bool {
    let n = f.source.n();
    (0..n).all(|i| {
        let ds = f.target.diffs[(i + n - 1) % n].compose(alg, &s.comps[i]);
        let sd = s.comps[(i + 1) % n].compose(alg, &f.source.diffs[i]);
        ds.add(alg, &sd).sub(alg, &f.comps[i]).is_zero()
    })
}

/// Hom in the n-periodic homotopy category: dimension and chain-map
/// representatives of a basis.
pub struct HomKn {
    pub dim: usize,
    pub basis: Vec<ProjPeriodicMap>,
}

pub fn hom_kn(alg: &PathAlgebra, x: &ProjPeriodic, y: &ProjPeriodic) -> HomKn {
    let (f_space, kernel) = chain_map_space(alg, x, y);
    let (_, b) = homotopy_operator(alg, x, y);
    let reps = quotient_representatives(&kernel, &b);
    let basis: Vec<ProjPeriodicMap> = reps
        .iter()
        .map(|col| ProjPeriodicMap::new(x.clone(), y.clone(), f_space.from_column(alg, col, 0)))
        .collect();
    HomKn { dim: basis.len(), basis }
}
