//! Right modules over a path algebra, in two guises: formal direct sums
//! of indecomposable projectives with morphism matrices over the algebra
//! ([`ProjModule`], [`ProjMap`]), and honest quiver representations with
//! one vector space per vertex ([`Representation`], [`RepMap`]).
//!
//! The right action convention: an arrow `a: v -> w` acts as a linear
//! map from the space at `w` to the space at `v`. Under this convention
//! `eval_proj(P_v)` has, at vertex `w`, the paths from `w` to `v` as a
//! basis, and `Hom(P_v, P_w)` is left multiplication by `e_w Λ e_v`.

mod resolve;

pub use resolve::{
    ext_basis, proj_resolution, resolution_is_exact, resolution_of_projective, ProjResolution,
};

use crate::exactlin::{Matrix, Scalar};
use crate::quiver::{AlgebraElement, PathAlgebra, PathId, VertexId};
use crate::{Error, Result};

/// Formal direct sum of indecomposable projectives, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjModule {
    pub summands: Vec<VertexId>,
}

impl ProjModule {
    pub fn new(summands: Vec<VertexId>) -> Self {
        ProjModule { summands }
    }

    pub fn empty() -> Self {
        ProjModule { summands: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn concat(&self, other: &ProjModule) -> ProjModule {
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        ProjModule { summands }
    }

    pub fn names(&self, alg: &PathAlgebra) -> Vec<String> {
        self.summands
            .iter()
            .map(|&v| alg.quiver.vertex_names[v].clone())
            .collect()
    }
}

/// Morphism of projectives: entry `(j, i)` is an element of
/// `e_{w_j} Λ e_{v_i}` and acts by left multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjMap {
    pub source: ProjModule,
    pub target: ProjModule,
    entries: Vec<AlgebraElement>,
}

impl ProjMap {
    pub fn zero(source: ProjModule, target: ProjModule) -> Self {
        let n = source.len() * target.len();
        ProjMap { source, target, entries: vec![AlgebraElement::zero(); n] }
    }

    pub fn identity(alg: &PathAlgebra, module: &ProjModule) -> Self {
        let mut m = ProjMap::zero(module.clone(), module.clone());
        for (i, &v) in module.summands.iter().enumerate() {
            m.set(i, i, alg.elem_unit(v));
        }
        m
    }

    pub fn from_entries(
        alg: &PathAlgebra,
        source: ProjModule,
        target: ProjModule,
        entries: Vec<AlgebraElement>,
    ) -> Result<Self> {
        assert_eq!(entries.len(), source.len() * target.len(), "entry grid shape");
        let m = ProjMap { source, target, entries };
        m.validate_typing(alg)?;
        Ok(m)
    }

    fn validate_typing(&self, alg: &PathAlgebra) -> Result<()> {
        for j in 0..self.target.len() {
            for i in 0..self.source.len() {
                let e = self.get(j, i);
                if e.is_zero() {
                    continue;
                }
                let expect = (self.source.summands[i], self.target.summands[j]);
                if alg.elem_endpoints(e) != Some(expect) {
                    return Err(Error::Invalid(format!(
                        "entry ({j},{i}) = {} is not supported on paths {} -> {}",
                        alg.format_elem(e),
                        alg.quiver.vertex_names[expect.0],
                        alg.quiver.vertex_names[expect.1],
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, j: usize, i: usize) -> &AlgebraElement {
        &self.entries[j * self.source.len() + i]
    }

    pub fn set(&mut self, j: usize, i: usize, e: AlgebraElement) {
        let cols = self.source.len();
        self.entries[j * cols + i] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix product through the algebra: `self` after `first`.
    pub fn compose(&self, alg: &PathAlgebra, first: &ProjMap) -> ProjMap {
        assert_eq!(first.target, self.source, "composition shape mismatch");
        let mut out = ProjMap::zero(first.source.clone(), self.target.clone());
        for j in 0..self.target.len() {
            for i in 0..first.source.len() {
                let mut acc = AlgebraElement::zero();
                for k in 0..self.source.len() {
                    let t = alg.elem_mul(self.get(j, k), first.get(k, i));
                    acc = alg.elem_add(&acc, &t);
                }
                out.set(j, i, acc);
            }
        }
        out
    }

    pub fn add(&self, alg: &PathAlgebra, other: &ProjMap) -> ProjMap {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| alg.elem_add(a, b))
            .collect();
        ProjMap { source: self.source.clone(), target: self.target.clone(), entries }
    }

    pub fn sub(&self, alg: &PathAlgebra, other: &ProjMap) -> ProjMap {
        self.add(alg, &other.neg(alg))
    }

    pub fn neg(&self, alg: &PathAlgebra) -> ProjMap {
        ProjMap {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self.entries.iter().map(|e| alg.elem_neg(e)).collect(),
        }
    }

    pub fn scale(&self, alg: &PathAlgebra, c: &Scalar) -> ProjMap {
        ProjMap {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self.entries.iter().map(|e| alg.elem_scale(c, e)).collect(),
        }
    }

    /// Block matrix: `blocks[r][c]` maps `sources[c] -> targets[r]`.
    pub fn block(
        alg: &PathAlgebra,
        sources: &[ProjModule],
        targets: &[ProjModule],
        blocks: &[Vec<Option<&ProjMap>>],
    ) -> ProjMap {
        let source = sources.iter().fold(ProjModule::empty(), |acc, m| acc.concat(m));
        let target = targets.iter().fold(ProjModule::empty(), |acc, m| acc.concat(m));
        let mut out = ProjMap::zero(source, target);
        let mut row0 = 0;
        for (r, tgt) in targets.iter().enumerate() {
            let mut col0 = 0;
            for (c, src) in sources.iter().enumerate() {
                if let Some(b) = blocks[r][c] {
                    assert_eq!(&b.source, src, "block source mismatch");
                    assert_eq!(&b.target, tgt, "block target mismatch");
                    for j in 0..tgt.len() {
                        for i in 0..src.len() {
                            out.set(row0 + j, col0 + i, b.get(j, i).clone());
                        }
                    }
                }
                col0 += src.len();
            }
            row0 += tgt.len();
        }
        let _ = alg; // typing was checked block-wise
        out
    }

    /// Restrict to a sub-grid of summands (by indices).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ProjMap {
        let source = ProjModule::new(cols.iter().map(|&i| self.source.summands[i]).collect());
        let target = ProjModule::new(rows.iter().map(|&j| self.target.summands[j]).collect());
        let mut out = ProjMap::zero(source, target);
        for (jj, &j) in rows.iter().enumerate() {
            for (ii, &i) in cols.iter().enumerate() {
                out.set(jj, ii, self.get(j, i).clone());
            }
        }
        out
    }

    /// All entries lie in the radical: no trivial-path coefficients.
    pub fn is_radical(&self, alg: &PathAlgebra) -> bool {
        for j in 0..self.target.len() {
            for i in 0..self.source.len() {
                let e = self.get(j, i);
                if e.terms.iter().any(|(p, _)| alg.path(*p).is_trivial()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn format(&self, alg: &PathAlgebra) -> Vec<Vec<String>> {
        (0..self.target.len())
            .map(|j| (0..self.source.len()).map(|i| alg.format_elem(self.get(j, i))).collect())
            .collect()
    }
}

/// A finite dimensional right module presented vertexwise. `actions[a]`
/// for an arrow `a: v -> w` is the matrix of the right action, a map
/// from the space at `w` to the space at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub actions: Vec<Matrix>,
}

impl Representation {
    pub fn zero(alg: &PathAlgebra) -> Self {
        let dims = vec![0; alg.quiver.num_vertices()];
        let actions = alg
            .quiver
            .arrows
            .iter()
            .map(|_| Matrix::zero(alg.field, 0, 0))
            .collect();
        Representation { dims, actions }
    }

    pub fn simple(alg: &PathAlgebra, v: VertexId) -> Self {
        let mut dims = vec![0; alg.quiver.num_vertices()];
        dims[v] = 1;
        let actions = alg
            .quiver
            .arrows
            .iter()
            .map(|a| Matrix::zero(alg.field, dims[a.source], dims[a.target]))
            .collect();
        Representation { dims, actions }
    }

    pub fn new(alg: &PathAlgebra, dims: Vec<usize>, actions: Vec<Matrix>) -> Result<Self> {
        let rep = Representation { dims, actions };
        rep.validate(alg)?;
        Ok(rep)
    }

    pub fn validate(&self, alg: &PathAlgebra) -> Result<()> {
        if self.dims.len() != alg.quiver.num_vertices() || self.actions.len() != alg.quiver.arrows.len() {
            return Err(Error::Invalid("representation shape mismatch".into()));
        }
        for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
            let m = &self.actions[a];
            if m.rows() != self.dims[arrow.source] || m.cols() != self.dims[arrow.target] {
                return Err(Error::Invalid(format!(
                    "action of {} has shape {}x{}, expected {}x{}",
                    arrow.name,
                    m.rows(),
                    m.cols(),
                    self.dims[arrow.source],
                    self.dims[arrow.target]
                )));
            }
        }
        for rel in &alg.relations {
            // evaluate the relation word: first applied arrow is the
            // rightmost matrix factor
            let src = alg.quiver.arrows[rel.word[0]].source;
            let tgt = alg.quiver.arrows[*rel.word.last().unwrap()].target;
            let mut m = Matrix::identity(alg.field, self.dims[src]);
            for &a in &rel.word {
                m = m.mul(&self.actions[a]);
            }
            let _ = tgt;
            if !m.is_zero() {
                return Err(Error::Invalid("a relation does not act as zero".into()));
            }
        }
        Ok(())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of the right action of a basis path: maps the space at the
    /// path's target to the space at its source. The first applied arrow
    /// is the leftmost matrix factor.
    pub fn act_path(&self, alg: &PathAlgebra, p: PathId) -> Matrix {
        let path = alg.path(p);
        let mut m = Matrix::identity(alg.field, self.dims[path.source]);
        for &a in &path.arrows {
            m = m.mul(&self.actions[a]);
        }
        m
    }

    /// Action of a homogeneous element of `e_tgt Λ e_src`.
    pub fn act_elem(&self, alg: &PathAlgebra, e: &AlgebraElement, src: VertexId, tgt: VertexId) -> Matrix {
        let mut m = Matrix::zero(alg.field, self.dims[src], self.dims[tgt]);
        for (p, c) in &e.terms {
            m = m.add(&self.act_path(alg, *p).scale(c));
        }
        m
    }

    /// Direct sum with inclusion and projection maps.
    pub fn direct_sum(alg: &PathAlgebra, parts: &[&Representation]) -> (Representation, Vec<RepMap>, Vec<RepMap>) {
        let nv = alg.quiver.num_vertices();
        let mut dims = vec![0usize; nv];
        for part in parts {
            for v in 0..nv {
                dims[v] += part.dims[v];
            }
        }
        let actions = alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                Matrix::from_fn(alg.field, dims[arrow.source], dims[arrow.target], |i, j| {
                    let mut ro = 0;
                    let mut co = 0;
                    for part in parts {
                        let (r, c) = (part.dims[arrow.source], part.dims[arrow.target]);
                        if i < ro + r && j < co + c {
                            return if i >= ro && j >= co {
                                part.actions[a].get(i - ro, j - co).clone()
                            } else {
                                alg.field.zero()
                            };
                        }
                        if i < ro + r || j < co + c {
                            return alg.field.zero();
                        }
                        ro += r;
                        co += c;
                    }
                    alg.field.zero()
                })
            })
            .collect();
        let total = Representation { dims, actions };
        let mut incls = Vec::new();
        let mut projs = Vec::new();
        let mut offset = vec![0usize; nv];
        for part in parts {
            let inc_blocks: Vec<Matrix> = (0..nv)
                .map(|v| {
                    Matrix::from_fn(alg.field, total.dims[v], part.dims[v], |i, j| {
                        if i == offset[v] + j {
                            alg.field.one()
                        } else {
                            alg.field.zero()
                        }
                    })
                })
                .collect();
            let proj_blocks: Vec<Matrix> = (0..nv)
                .map(|v| {
                    Matrix::from_fn(alg.field, part.dims[v], total.dims[v], |i, j| {
                        if j == offset[v] + i {
                            alg.field.one()
                        } else {
                            alg.field.zero()
                        }
                    })
                })
                .collect();
            incls.push(RepMap { source: (*part).clone(), target: total.clone(), blocks: inc_blocks });
            projs.push(RepMap { source: total.clone(), target: (*part).clone(), blocks: proj_blocks });
            for v in 0..nv {
                offset[v] += part.dims[v];
            }
        }
        (total, incls, projs)
    }
}

/// Morphism of representations: one matrix per vertex, commuting with
/// every arrow action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    pub source: Representation,
    pub target: Representation,
    pub blocks: Vec<Matrix>,
}

impl RepMap {
    pub fn zero(alg: &PathAlgebra, source: &Representation, target: &Representation) -> Self {
        let blocks = (0..alg.quiver.num_vertices())
            .map(|v| Matrix::zero(alg.field, target.dims[v], source.dims[v]))
            .collect();
        RepMap { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(alg: &PathAlgebra, rep: &Representation) -> Self {
        let blocks = (0..alg.quiver.num_vertices())
            .map(|v| Matrix::identity(alg.field, rep.dims[v]))
            .collect();
        RepMap { source: rep.clone(), target: rep.clone(), blocks }
    }

    pub fn new(source: Representation, target: Representation, blocks: Vec<Matrix>) -> Self {
        RepMap { source, target, blocks }
    }

    pub fn compose(&self, first: &RepMap) -> RepMap {
        assert_eq!(first.target, self.source, "composition shape mismatch");
        let blocks = self
            .blocks
            .iter()
            .zip(&first.blocks)
            .map(|(g, f)| g.mul(f))
            .collect();
        RepMap { source: first.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        RepMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn sub(&self, other: &RepMap) -> RepMap {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        RepMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn neg(&self) -> RepMap {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> RepMap {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    /// Check Λ-linearity: commutes with every arrow action.
    pub fn commutes(&self, alg: &PathAlgebra) -> bool {
        alg.quiver.arrows.iter().enumerate().all(|(a, arrow)| {
            let lhs = self.blocks[arrow.source].mul(&self.source.actions[a]);
            let rhs = self.target.actions[a].mul(&self.blocks[arrow.target]);
            lhs == rhs
        })
    }
}

/// Basis bookkeeping for an evaluated projective: at each vertex `w` the
/// basis vectors are pairs (summand index, path from `w` to that
/// summand's vertex), in summand-major order.
#[derive(Debug, Clone)]
pub struct EvalBasis {
    pub per_vertex: Vec<Vec<(usize, PathId)>>,
}

impl EvalBasis {
    pub fn position(&self, v: VertexId, summand: usize, path: PathId) -> usize {
        self.per_vertex[v]
            .iter()
            .position(|&(s, p)| s == summand && p == path)
            .expect("basis element exists")
    }
}

pub fn eval_basis(alg: &PathAlgebra, module: &ProjModule) -> EvalBasis {
    let per_vertex = (0..alg.quiver.num_vertices())
        .map(|w| {
            let mut list = Vec::new();
            for (i, &v) in module.summands.iter().enumerate() {
                for &p in alg.hom_basis(w, v) {
                    list.push((i, p));
                }
            }
            list
        })
        .collect();
    EvalBasis { per_vertex }
}

/// Evaluate a formal projective to a representation.
pub fn eval_proj(alg: &PathAlgebra, module: &ProjModule) -> Representation {
    let basis = eval_basis(alg, module);
    let dims: Vec<usize> = basis.per_vertex.iter().map(|b| b.len()).collect();
    let actions = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let (u, w) = (arrow.source, arrow.target);
            let mut m = Matrix::zero(alg.field, dims[u], dims[w]);
            for (col, &(i, p)) in basis.per_vertex[w].iter().enumerate() {
                // right-multiply the basis path by the arrow
                let arrow_path = alg
                    .hom_basis(u, w)
                    .iter()
                    .copied()
                    .find(|&q| alg.path(q).arrows.as_slice() == [a])
                    .expect("arrow is a basis path");
                if let Some(q) = alg.mul_paths(p, arrow_path) {
                    let row = basis.position(u, i, q);
                    m.set(row, col, alg.field.one());
                }
            }
            m
        })
        .collect();
    Representation { dims, actions }
}

/// Evaluate a morphism of projectives to a morphism of representations.
pub fn eval_projmap(alg: &PathAlgebra, f: &ProjMap) -> RepMap {
    let sb = eval_basis(alg, &f.source);
    let tb = eval_basis(alg, &f.target);
    let source = eval_proj(alg, &f.source);
    let target = eval_proj(alg, &f.target);
    let blocks = (0..alg.quiver.num_vertices())
        .map(|u| {
            let mut m = Matrix::zero(alg.field, target.dims[u], source.dims[u]);
            for (col, &(i, p)) in sb.per_vertex[u].iter().enumerate() {
                for j in 0..f.target.len() {
                    for (q, c) in &f.get(j, i).terms {
                        if let Some(r) = alg.mul_paths(*q, p) {
                            let row = tb.position(u, j, r);
                            let prev = m.get(row, col).clone();
                            m.set(row, col, alg.field.add(&prev, c));
                        }
                    }
                }
            }
            m
        })
        .collect();
    RepMap { source, target, blocks }
}

/// Recover the morphism of projectives from its evaluation, by reading
/// off the images of the summand generators.
pub fn projmap_from_repmap(
    alg: &PathAlgebra,
    source: &ProjModule,
    target: &ProjModule,
    rm: &RepMap,
) -> ProjMap {
    let sb = eval_basis(alg, source);
    let tb = eval_basis(alg, target);
    let mut out = ProjMap::zero(source.clone(), target.clone());
    for (i, &v) in source.summands.iter().enumerate() {
        let gen = sb.position(v, i, alg.unit_path(v));
        let image = rm.blocks[v].column(gen);
        for (row, &(j, q)) in tb.per_vertex[v].iter().enumerate() {
            let c = image.get(row, 0);
            if alg.field.is_zero(c) {
                continue;
            }
            let term = alg.elem_scale(c, &alg.elem_from_path(q));
            let prev = out.get(j, i).clone();
            out.set(j, i, alg.elem_add(&prev, &term));
        }
    }
    out
}

/// Basis of the space of Λ-linear maps `M -> N`, found by solving the
/// arrow-commutation system.
pub fn hom_space(alg: &PathAlgebra, m: &Representation, n: &Representation) -> Vec<RepMap> {
    let nv = alg.quiver.num_vertices();
    let field = alg.field;
    // unknowns: entries of each vertex block, vertex-major, row-major
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let total = offsets[nv];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
        let (v, w) = (arrow.source, arrow.target);
        // condition: phi_v * act_m - act_n * phi_w = 0, an (n_v x m_w) grid
        for i in 0..n.dims[v] {
            for j in 0..m.dims[w] {
                let mut row = vec![field.zero(); total];
                for k in 0..m.dims[v] {
                    let idx = offsets[v] + i * m.dims[v] + k;
                    row[idx] = field.add(&row[idx], m.actions[a].get(k, j));
                }
                for k in 0..n.dims[w] {
                    let idx = offsets[w] + k * m.dims[w] + j;
                    row[idx] = field.sub(&row[idx], n.actions[a].get(i, k));
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(field, 0, total)
    } else {
        Matrix::from_rows(field, rows)
    };
    let null = system.nullspace();
    (0..null.cols())
        .map(|c| {
            let blocks = (0..nv)
                .map(|v| {
                    Matrix::from_fn(field, n.dims[v], m.dims[v], |i, k| {
                        null.get(offsets[v] + i * m.dims[v] + k, c).clone()
                    })
                })
                .collect();
            RepMap { source: m.clone(), target: n.clone(), blocks }
        })
        .collect()
}

/// Kernel and image of a morphism, as subrepresentations with inclusion
/// maps. Exactness `dim ker + dim im = dim source` holds vertexwise.
pub fn kernel_image(alg: &PathAlgebra, f: &RepMap) -> ((Representation, RepMap), (Representation, RepMap)) {
    let nv = alg.quiver.num_vertices();
    let ker_basis: Vec<Matrix> = (0..nv).map(|v| f.blocks[v].nullspace()).collect();
    let im_basis: Vec<Matrix> = (0..nv)
        .map(|v| {
            let cols = f.blocks[v].column_basis();
            f.blocks[v].select_columns(&cols)
        })
        .collect();
    let sub_rep = |basis: &[Matrix], ambient: &Representation| -> Representation {
        let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
        let actions = alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (v, w) = (arrow.source, arrow.target);
                let image = ambient.actions[a].mul(&basis[w]);
                if basis[v].cols() == 0 {
                    debug_assert!(image.is_zero());
                    return Matrix::zero(alg.field, 0, dims[w]);
                }
                basis[v]
                    .solve(&image)
                    .expect("shape ok")
                    .expect("subspace is action-stable")
                    .particular
            })
            .collect();
        Representation { dims, actions }
    };
    let ker = sub_rep(&ker_basis, &f.source);
    let ker_incl = RepMap { source: ker.clone(), target: f.source.clone(), blocks: ker_basis };
    let im = sub_rep(&im_basis, &f.target);
    let im_incl = RepMap { source: im.clone(), target: f.target.clone(), blocks: im_basis };
    ((ker, ker_incl), (im, im_incl))
}

/// Quotient of the target of an inclusion by its image.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub rep: Representation,
    pub proj: RepMap,
    /// Vertexwise linear section of the projection (not Λ-linear in
    /// general); `proj ∘ section = 1`.
    pub section: Vec<Matrix>,
}

/// Quotient of the target of an inclusion by its image; returns the
/// quotient and the projection map.
pub fn quotient_rep(alg: &PathAlgebra, incl: &RepMap) -> (Representation, RepMap) {
    let q = quotient_with_section(alg, incl);
    (q.rep, q.proj)
}

pub fn quotient_with_section(alg: &PathAlgebra, incl: &RepMap) -> Quotient {
    let nv = alg.quiver.num_vertices();
    let m = &incl.target;
    let field = alg.field;
    // complete the image columns to a basis by standard vectors
    let mut comp: Vec<Matrix> = Vec::new();
    let mut proj: Vec<Matrix> = Vec::new();
    for v in 0..nv {
        let s = &incl.blocks[v];
        let id = Matrix::identity(field, m.dims[v]);
        let pivots = s.hstack(&id).column_basis();
        let extra: Vec<usize> = pivots.iter().filter(|&&c| c >= s.cols()).map(|&c| c - s.cols()).collect();
        let c = id.select_columns(&extra);
        // coordinates: [s | c] is square invertible; projection takes the
        // c-part of the coordinate vector
        let basis = s.hstack(&c);
        let pi = if m.dims[v] == 0 {
            Matrix::zero(field, 0, 0)
        } else {
            basis
                .inverse()
                .expect("completed to a basis")
                .select_rows(&(s.cols()..s.cols() + c.cols()).collect::<Vec<_>>())
        };
        comp.push(c);
        proj.push(pi);
    }
    let dims: Vec<usize> = comp.iter().map(|c| c.cols()).collect();
    let actions = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let (v, w) = (arrow.source, arrow.target);
            proj[v].mul(&m.actions[a]).mul(&comp[w])
        })
        .collect();
    let q = Representation { dims, actions };
    let proj_map = RepMap { source: m.clone(), target: q.clone(), blocks: proj };
    Quotient { rep: q, proj: proj_map, section: comp }
}

/// The radical subrepresentation `M rad Λ`, with its inclusion: at each
/// vertex, the sum of the images of the arrows leaving that vertex.
pub fn radical(alg: &PathAlgebra, m: &Representation) -> (Representation, RepMap) {
    let nv = alg.quiver.num_vertices();
    let basis: Vec<Matrix> = (0..nv)
        .map(|v| {
            let mut rad = Matrix::zero(alg.field, m.dims[v], 0);
            for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
                if arrow.source == v {
                    rad = rad.hstack(&m.actions[a]);
                }
            }
            let cols = rad.column_basis();
            rad.select_columns(&cols)
        })
        .collect();
    let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
    let actions = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let img = m.actions[a].mul(&basis[arrow.target]);
            if dims[arrow.source] == 0 {
                Matrix::zero(alg.field, 0, img.cols())
            } else {
                basis[arrow.source]
                    .solve(&img)
                    .expect("shape ok")
                    .expect("radical is action-stable")
                    .particular
            }
        })
        .collect();
    let rad = Representation { dims, actions };
    let incl = RepMap { source: rad.clone(), target: m.clone(), blocks: basis };
    (rad, incl)
}

/// Top of a module and its projective cover: `T = ⊕ P_v^{t_v}` with a
/// surjection onto `M` whose kernel sits inside the radical.
pub fn top_and_cover(alg: &PathAlgebra, m: &Representation) -> (ProjModule, RepMap) {
    let nv = alg.quiver.num_vertices();
    let field = alg.field;
    let mut summands = Vec::new();
    let mut generators: Vec<(VertexId, Matrix)> = Vec::new();
    for v in 0..nv {
        // radical part at v: images of all arrows out of v
        let mut rad = Matrix::zero(field, m.dims[v], 0);
        for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
            if arrow.source == v {
                rad = rad.hstack(&m.actions[a]);
            }
        }
        let id = Matrix::identity(field, m.dims[v]);
        let pivots = rad.hstack(&id).column_basis();
        for &c in pivots.iter().filter(|&&c| c >= rad.cols()) {
            summands.push(v);
            generators.push((v, id.column(c - rad.cols())));
        }
    }
    let t = ProjModule::new(summands);
    let basis = eval_basis(alg, &t);
    let tp = eval_proj(alg, &t);
    let blocks = (0..nv)
        .map(|u| {
            let mut mat = Matrix::zero(field, m.dims[u], tp.dims[u]);
            for (col, &(i, p)) in basis.per_vertex[u].iter().enumerate() {
                let (v, gen) = &generators[i];
                debug_assert_eq!(*v, alg.path(p).target);
                let vec = m.act_path(alg, p).mul(gen);
                for r in 0..m.dims[u] {
                    mat.set(r, col, vec.get(r, 0).clone());
                }
            }
            mat
        })
        .collect();
    let cover = RepMap { source: tp, target: m.clone(), blocks };
    (t, cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::samples;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn proj_p(alg: &PathAlgebra, name: &str) -> ProjModule {
        ProjModule::new(vec![alg.quiver.vertex_id(name).unwrap()])
    }

    #[test]
    fn eval_proj_dimensions_match_path_counts() {
        let alg = samples::three_cycle_ba(Field::rational());
        let p2 = eval_proj(&alg, &proj_p(&alg, "2"));
        assert_eq!(p2.total_dim(), 4);
        assert_eq!(p2.dims, vec![1, 2, 1]);
        p2.validate(&alg).unwrap();

        let alg52 = samples::four_cycle_ba_dg(Field::rational());
        let p1 = eval_proj(&alg52, &proj_p(&alg52, "1"));
        assert_eq!(p1.total_dim(), 2);
    }

    #[test]
    fn eval_projmap_is_functorial_on_seeded_random_pairs() {
        let alg = samples::three_cycle_ba(Field::prime(5).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let modules: Vec<ProjModule> = vec![
            proj_p(&alg, "1"),
            proj_p(&alg, "2"),
            proj_p(&alg, "1").concat(&proj_p(&alg, "3")),
        ];
        for _ in 0..40 {
            let a = &modules[rng.gen_range(0..modules.len())];
            let b = &modules[rng.gen_range(0..modules.len())];
            let c = &modules[rng.gen_range(0..modules.len())];
            let f = random_projmap(&alg, a, b, &mut rng);
            let g = random_projmap(&alg, b, c, &mut rng);
            let gf = g.compose(&alg, &f);
            let lhs = eval_projmap(&alg, &gf);
            let rhs = eval_projmap(&alg, &g).compose(&eval_projmap(&alg, &f));
            assert_eq!(lhs.blocks, rhs.blocks);
            // round trip through representations
            let back = projmap_from_repmap(&alg, a, c, &lhs);
            assert_eq!(back, gf);
        }
        let id = ProjMap::identity(&alg, &modules[2]);
        let ev = eval_projmap(&alg, &id);
        assert_eq!(ev.blocks, RepMap::identity(&alg, &ev.source).blocks);
    }

    pub(crate) fn random_projmap(
        alg: &PathAlgebra,
        source: &ProjModule,
        target: &ProjModule,
        rng: &mut ChaCha8Rng,
    ) -> ProjMap {
        let mut f = ProjMap::zero(source.clone(), target.clone());
        for j in 0..target.len() {
            for i in 0..source.len() {
                let mut e = AlgebraElement::zero();
                for &p in alg.hom_basis(source.summands[i], target.summands[j]) {
                    let c = alg.field.random(rng);
                    e = alg.elem_add(&e, &alg.elem_scale(&c, &alg.elem_from_path(p)));
                }
                f.set(j, i, e);
            }
        }
        f
    }

    #[test]
    fn hom_space_dimensions_match_path_counts() {
        let alg = samples::triangle_ba(Field::rational());
        let p1 = eval_proj(&alg, &proj_p(&alg, "1"));
        let p23 = eval_proj(&alg, &proj_p(&alg, "2").concat(&proj_p(&alg, "3")));
        assert_eq!(hom_space(&alg, &p1, &p23).len(), 2);
        let p2 = eval_proj(&alg, &proj_p(&alg, "2"));
        assert_eq!(hom_space(&alg, &p2, &p2).len(), 1);
        let s1 = Representation::simple(&alg, 0);
        let s2 = Representation::simple(&alg, 1);
        assert_eq!(hom_space(&alg, &s1, &s2).len(), 0);
        for map in hom_space(&alg, &p1, &p23) {
            assert!(map.commutes(&alg));
        }
    }

    #[test]
    fn hom_space_between_projectives_counts_basis_paths() {
        for alg in [
            samples::three_cycle_ba(Field::prime(3).unwrap()),
            samples::four_cycle_ba_dg(Field::rational()),
        ] {
            for v in 0..alg.quiver.num_vertices() {
                for w in 0..alg.quiver.num_vertices() {
                    let pv = eval_proj(&alg, &ProjModule::new(vec![v]));
                    let pw = eval_proj(&alg, &ProjModule::new(vec![w]));
                    assert_eq!(hom_space(&alg, &pv, &pw).len(), alg.hom_basis(v, w).len());
                }
            }
        }
    }

    #[test]
    fn kernel_image_of_nilpotent_multiplication() {
        let alg = samples::three_cycle_ba(Field::rational());
        let p2 = proj_p(&alg, "2");
        let v2 = alg.quiver.vertex_id("2").unwrap();
        let eps = ProjMap::from_entries(
            &alg,
            p2.clone(),
            p2.clone(),
            vec![alg.parse_elem("a*g*b", Some((v2, v2))).unwrap()],
        )
        .unwrap();
        let f = eval_projmap(&alg, &eps);
        let ((ker, ker_incl), (im, im_incl)) = kernel_image(&alg, &f);
        assert_eq!(im.total_dim(), 1);
        assert_eq!(im.dims[v2], 1);
        assert_eq!(ker.total_dim(), 3);
        assert!(ker_incl.commutes(&alg));
        assert!(im_incl.commutes(&alg));
        // zero map edge case
        let z = RepMap::zero(&alg, &f.source, &f.target);
        let ((kz, _), (iz, _)) = kernel_image(&alg, &z);
        assert_eq!(kz.total_dim(), f.source.total_dim());
        assert_eq!(iz.total_dim(), 0);
    }

    #[test]
    fn rank_nullity_on_seeded_random_repmaps() {
        let alg = samples::four_cycle_ba_dg(Field::prime(5).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mods = ["1", "2", "3", "4"];
        for _ in 0..100 {
            let src = proj_p(&alg, mods[rng.gen_range(0..4)]).concat(&proj_p(&alg, mods[rng.gen_range(0..4)]));
            let tgt = proj_p(&alg, mods[rng.gen_range(0..4)]);
            let f = eval_projmap(&alg, &random_projmap(&alg, &src, &tgt, &mut rng));
            let ((ker, _), (im, _)) = kernel_image(&alg, &f);
            for v in 0..alg.quiver.num_vertices() {
                assert_eq!(ker.dims[v] + im.dims[v], f.source.dims[v]);
            }
        }
    }

    #[test]
    fn cover_of_simple_and_projective() {
        let alg = samples::three_cycle_ba(Field::rational());
        let v2 = alg.quiver.vertex_id("2").unwrap();
        let s2 = Representation::simple(&alg, v2);
        let (t, cover) = top_and_cover(&alg, &s2);
        assert_eq!(t.summands, vec![v2]);
        assert!(cover.commutes(&alg));

        let p2 = eval_proj(&alg, &proj_p(&alg, "2"));
        let (t2, cover2) = top_and_cover(&alg, &p2);
        assert_eq!(t2.summands, vec![v2]);
        assert!(cover2.is_iso());

        let z = Representation::zero(&alg);
        let (tz, _) = top_and_cover(&alg, &z);
        assert!(tz.is_empty());
    }

    #[test]
    fn cover_of_radical_of_p1_in_the_two_relation_four_cycle() {
        // rad P1 is spanned by the path d and has top S4
        let alg = samples::four_cycle_ba_dg(Field::rational());
        let rep = eval_proj(&alg, &proj_p(&alg, "1"));
        let (rad, rad_incl) = radical(&alg, &rep);
        assert!(rad_incl.commutes(&alg));
        assert_eq!(rad.total_dim(), 1);
        let (top, _) = top_and_cover(&alg, &rad);
        assert_eq!(top.summands, vec![alg.quiver.vertex_id("4").unwrap()]);
    }

    #[test]
    fn quotient_rep_dimensions_and_linearity() {
        let alg = samples::three_cycle_ba(Field::prime(5).unwrap());
        let p2 = proj_p(&alg, "2");
        let v2 = alg.quiver.vertex_id("2").unwrap();
        let eps = ProjMap::from_entries(
            &alg,
            p2.clone(),
            p2.clone(),
            vec![alg.parse_elem("a*g*b", Some((v2, v2))).unwrap()],
        )
        .unwrap();
        let f = eval_projmap(&alg, &eps);
        let ((_, _), (_, im_incl)) = kernel_image(&alg, &f);
        let (q, pr) = quotient_rep(&alg, &im_incl);
        assert_eq!(q.total_dim(), f.target.total_dim() - 1);
        assert!(pr.commutes(&alg));
        q.validate(&alg).unwrap();
    }
}
