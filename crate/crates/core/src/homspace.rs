//! Coordinates on morphism spaces.
//!
//! `Hom(P, Q)` between formal projectives is a finite dimensional vector
//! space with basis indexed by (target summand, source summand, path).
//! [`MapSpace`] fixes that basis so chain-map conditions, null-homotopy
//! equations and lifting problems all become plain linear systems over
//! the base field.

use crate::exactlin::{Matrix, Scalar};
use crate::quiver::{PathAlgebra, PathId};
use crate::repmod::{hom_space, ProjMap, ProjModule, RepMap, Representation};

/// Fixed coordinates on `Hom(source, target)`.
#[derive(Debug, Clone)]
pub struct MapSpace {
    pub source: ProjModule,
    pub target: ProjModule,
    slots: Vec<(usize, usize, PathId)>,
}

impl MapSpace {
    pub fn new(alg: &PathAlgebra, source: &ProjModule, target: &ProjModule) -> Self {
        let mut slots = Vec::new();
        for j in 0..target.len() {
            for i in 0..source.len() {
                for &p in alg.hom_basis(source.summands[i], target.summands[j]) {
                    slots.push((j, i, p));
                }
            }
        }
        MapSpace { source: source.clone(), target: target.clone(), slots }
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    pub fn to_vec(&self, alg: &PathAlgebra, f: &ProjMap) -> Vec<Scalar> {
        assert_eq!(f.source, self.source);
        assert_eq!(f.target, self.target);
        self.slots
            .iter()
            .map(|&(j, i, p)| {
                f.get(j, i)
                    .terms
                    .iter()
                    .find(|(q, _)| *q == p)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| alg.field.zero())
            })
            .collect()
    }

    pub fn from_vec(&self, alg: &PathAlgebra, coords: &[Scalar]) -> ProjMap {
        assert_eq!(coords.len(), self.dim());
        let mut f = ProjMap::zero(self.source.clone(), self.target.clone());
        for (&(j, i, p), c) in self.slots.iter().zip(coords) {
            if alg.field.is_zero(c) {
                continue;
            }
            let term = alg.elem_scale(c, &alg.elem_from_path(p));
            let prev = f.get(j, i).clone();
            f.set(j, i, alg.elem_add(&prev, &term));
        }
        f
    }

    pub fn from_column(&self, alg: &PathAlgebra, m: &Matrix, col: usize) -> ProjMap {
        let coords: Vec<Scalar> = (0..m.rows()).map(|r| m.get(r, col).clone()).collect();
        self.from_vec(alg, &coords)
    }

    pub fn basis_map(&self, alg: &PathAlgebra, k: usize) -> ProjMap {
        let (j, i, p) = self.slots[k];
        let mut f = ProjMap::zero(self.source.clone(), self.target.clone());
        f.set(j, i, alg.elem_from_path(p));
        f
    }

    /// Matrix of a linear operator between map spaces, evaluated on the
    /// basis. The operator must be linear in its argument.
    pub fn operator(
        &self,
        alg: &PathAlgebra,
        codomain: &MapSpace,
        op: impl Fn(&ProjMap) -> ProjMap,
    ) -> Matrix {
        let mut m = Matrix::zero(alg.field, codomain.dim(), self.dim());
        for k in 0..self.dim() {
            let image = op(&self.basis_map(alg, k));
            for (r, c) in codomain.to_vec(alg, &image).into_iter().enumerate() {
                m.set(r, k, c);
            }
        }
        m
    }
}

/// Coordinates on a product of map spaces, used for whole-complex
/// systems: block `b` occupies a contiguous coordinate range.
#[derive(Debug, Clone)]
pub struct ProductSpace {
    pub factors: Vec<MapSpace>,
    offsets: Vec<usize>,
}

impl ProductSpace {
    pub fn new(factors: Vec<MapSpace>) -> Self {
        let mut offsets = vec![0usize];
        for f in &factors {
            offsets.push(offsets.last().unwrap() + f.dim());
        }
        ProductSpace { factors, offsets }
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn to_vec(&self, alg: &PathAlgebra, maps: &[ProjMap]) -> Vec<Scalar> {
        assert_eq!(maps.len(), self.factors.len());
        let mut out = Vec::with_capacity(self.dim());
        for (space, map) in self.factors.iter().zip(maps) {
            out.extend(space.to_vec(alg, map));
        }
        out
    }

    pub fn from_vec(&self, alg: &PathAlgebra, coords: &[Scalar]) -> Vec<ProjMap> {
        assert_eq!(coords.len(), self.dim());
        self.factors
            .iter()
            .enumerate()
            .map(|(b, space)| space.from_vec(alg, &coords[self.offsets[b]..self.offsets[b + 1]]))
            .collect()
    }

    pub fn from_column(&self, alg: &PathAlgebra, m: &Matrix, col: usize) -> Vec<ProjMap> {
        let coords: Vec<Scalar> = (0..m.rows()).map(|r| m.get(r, col).clone()).collect();
        self.from_vec(alg, &coords)
    }

    /// Assemble a block-structured operator matrix. `blocks` yields
    /// `(row_space_index, col_space_index, operator_matrix)` triples that
    /// are accumulated into the stacked system.
    pub fn assemble(
        field: crate::exactlin::Field,
        rows: &ProductSpace,
        cols: &ProductSpace,
        blocks: &[(usize, usize, Matrix)],
    ) -> Matrix {
        let mut big = Matrix::zero(field, rows.dim(), cols.dim());
        for (rb, cb, m) in blocks {
            let r0 = rows.offsets[*rb];
            let c0 = cols.offsets[*cb];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let prev = big.get(r0 + i, c0 + j).clone();
                    big.set(r0 + i, c0 + j, field.add(&prev, m.get(i, j)));
                }
            }
        }
        big
    }
}

/// Representatives of `ker L / im B`, given `im B ⊆ ker L`: returns the
/// kernel columns that extend a column basis of `B` to one of `ker L`.
pub fn quotient_representatives(kernel: &Matrix, boundaries: &Matrix) -> Vec<Matrix> {
    let combined = boundaries.hstack(kernel);
    combined
        .column_basis()
        .into_iter()
        .filter(|&c| c >= boundaries.cols())
        .map(|c| kernel.column(c - boundaries.cols()))
        .collect()
}

/// Flatten a morphism of representations to a coordinate column.
pub fn repmap_to_vec(rm: &RepMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    for b in &rm.blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.push(b.get(i, j).clone());
            }
        }
    }
    out
}

/// Solve `g ∘ φ = h` for a Λ-linear `φ: B -> A`, where `g: A -> C` and
/// `h: B -> C`. Returns any solution, deterministically.
pub fn factor_left(
    alg: &PathAlgebra,
    g: &RepMap,
    h: &RepMap,
    b_rep: &Representation,
) -> Option<RepMap> {
    let basis = hom_space(alg, b_rep, &g.source);
    let field = alg.field;
    let rows = repmap_to_vec(h).len();
    let mut system = Matrix::zero(field, rows, basis.len());
    for (k, phi) in basis.iter().enumerate() {
        let img = repmap_to_vec(&g.compose(phi));
        for (r, c) in img.into_iter().enumerate() {
            system.set(r, k, c);
        }
    }
    let rhs = Matrix::from_fn(field, rows, 1, |r, _| repmap_to_vec(h)[r].clone());
    let sol = system.solve(&rhs).ok()??;
    let mut out = RepMap::zero(alg, b_rep, &g.source);
    for (k, phi) in basis.iter().enumerate() {
        let c = sol.particular.get(k, 0);
        if !field.is_zero(c) {
            out = out.add(&phi.scale(c));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::repmod::{eval_proj, eval_projmap};
    use crate::samples;

    #[test]
    fn map_space_round_trip_and_composition_operator() {
        let alg = samples::three_cycle_ba(Field::prime(5).unwrap());
        let v = |n: &str| alg.quiver.vertex_id(n).unwrap();
        let p1 = ProjModule::new(vec![v("1")]);
        let p2 = ProjModule::new(vec![v("2")]);
        let space12 = MapSpace::new(&alg, &p1, &p2);
        assert_eq!(space12.dim(), alg.hom_basis(v("1"), v("2")).len());
        let f = space12.basis_map(&alg, 0);
        let coords = space12.to_vec(&alg, &f);
        assert_eq!(space12.from_vec(&alg, &coords), f);

        // left composition with a fixed map is linear and matches direct
        // computation on a basis element
        let space11 = MapSpace::new(&alg, &p1, &p1);
        let g = space12.basis_map(&alg, 0);
        let op = space11.operator(&alg, &space12, |x| g.compose(&alg, x));
        let id = ProjMap::identity(&alg, &p1);
        let out = space12.from_column(&alg, &op.mul(&Matrix::from_fn(alg.field, space11.dim(), 1, |r, _| {
            space11.to_vec(&alg, &id)[r].clone()
        })), 0);
        assert_eq!(out, g);
    }

    #[test]
    fn factor_left_recovers_known_factorization() {
        let alg = samples::three_cycle_ba(Field::rational());
        let v = |n: &str| alg.quiver.vertex_id(n).unwrap();
        let p1 = ProjModule::new(vec![v("1")]);
        let p2 = ProjModule::new(vec![v("2")]);
        let a_map = ProjMap::from_entries(
            &alg,
            p1.clone(),
            p2.clone(),
            vec![alg.parse_elem("a", Some((v("1"), v("2")))).unwrap()],
        )
        .unwrap();
        // factor a through itself: g = eval(a), h = eval(a), expect phi
        // with g∘phi = h; the identity is one solution
        let g = eval_projmap(&alg, &a_map);
        let h = g.clone();
        let b_rep = eval_proj(&alg, &p1);
        let phi = factor_left(&alg, &g, &h, &b_rep).expect("identity factors");
        assert_eq!(g.compose(&phi).blocks, h.blocks);
    }
}
