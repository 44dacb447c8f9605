//! Minimal models of periodic complexes of projectives by Gaussian
//! elimination: strip invertible differential entries until every entry
//! lies in the radical. The resulting object is unique up to
//! isomorphism and homotopy equivalent to the input, with explicit
//! witnesses.

use super::{ProjPeriodic, ProjPeriodicMap};
use crate::quiver::PathAlgebra;
use crate::repmod::{ProjMap, ProjModule};

/// Homotopy-equivalence witnesses: `to_min ∘ from_min = 1` strictly and
/// `1 - from_min ∘ to_min = d s + s d` with `homotopy[i]: X^i -> X^{i-1}`
/// on the original complex.
#[derive(Debug, Clone)]
pub struct PeriodicMinWitness {
    pub to_min: ProjPeriodicMap,
    pub from_min: ProjPeriodicMap,
    pub homotopy: Vec<ProjMap>,
}

/// Reduce to a minimal model (all differential entries radical).
pub fn minimize_periodic(alg: &PathAlgebra, x: &ProjPeriodic) -> (ProjPeriodic, PeriodicMinWitness) {
    let mut cur = x.clone();
    let mut to_min = ProjPeriodicMap::identity(alg, x);
    let mut from_min = ProjPeriodicMap::identity(alg, x);
    let n = x.n();
    let mut homotopy: Vec<ProjMap> = (0..n)
        .map(|i| ProjMap::zero(x.terms[i].clone(), x.terms[(i + n - 1) % n].clone()))
        .collect();

    loop {
        let Some((pos, j, i)) = find_unit(alg, &cur) else { break };
        let (next, f1, g1, s1) = if n == 1 {
            eliminate_period_one(alg, &cur, j, i)
        } else {
            eliminate_general(alg, &cur, pos, j, i)
        };
        // fold the new retraction into the accumulated one
        for q in 0..n {
            let down = from_min.comps[(q + n - 1) % n]
                .compose(alg, &s1[q])
                .compose(alg, &to_min.comps[q]);
            homotopy[q] = homotopy[q].add(alg, &down);
        }
        to_min = f1.compose(alg, &to_min);
        from_min = from_min.compose(alg, &g1);
        cur = next;
    }
    (cur, PeriodicMinWitness { to_min, from_min, homotopy })
}

/// First differential entry with an invertible component, scanning
/// positions in order and entries row-major. At period one the entry
/// must be off the diagonal; when any invertible entry exists, an
/// off-diagonal one does too.
fn find_unit(alg: &PathAlgebra, x: &ProjPeriodic) -> Option<(usize, usize, usize)> {
    let n = x.n();
    for (pos, d) in x.diffs.iter().enumerate() {
        for j in 0..d.target.len() {
            for i in 0..d.source.len() {
                if n == 1 && j == i {
                    continue;
                }
                let e = d.get(j, i);
                if e.is_zero() {
                    continue;
                }
                let v = d.source.summands[i];
                if d.target.summands[j] == v && !alg.field.is_zero(&alg.unit_coefficient(e, v)) {
                    return Some((pos, j, i));
                }
            }
        }
    }
    None
}

fn unit_map(alg: &PathAlgebra, v: usize, e: crate::quiver::AlgebraElement) -> ProjMap {
    let m = ProjModule::new(vec![v]);
    let mut map = ProjMap::zero(m.clone(), m);
    map.set(0, 0, e);
    map
}

/// Elimination for period `n >= 2`: cancel source summand `i` of
/// `X^pos` against target summand `j` of `X^{pos+1}`. Only the pivot
/// differential needs a Schur correction; its neighbors lose a row
/// resp. a column.
fn eliminate_general(
    alg: &PathAlgebra,
    x: &ProjPeriodic,
    pos: usize,
    j: usize,
    i: usize,
) -> (ProjPeriodic, ProjPeriodicMap, ProjPeriodicMap, Vec<ProjMap>) {
    let n = x.n();
    let d = &x.diffs[pos];
    let v = d.source.summands[i];
    let u = d.get(j, i).clone();
    let uinv = unit_map(alg, v, alg.elem_local_inverse(&u, v).expect("pivot is invertible"));

    let keep_src: Vec<usize> = (0..d.source.len()).filter(|&c| c != i).collect();
    let keep_tgt: Vec<usize> = (0..d.target.len()).filter(|&r| r != j).collect();
    let alpha = d.submatrix(&keep_tgt, &keep_src);
    let beta = d.submatrix(&keep_tgt, &[i]);
    let gamma = d.submatrix(&[j], &keep_src);
    let new_d = alpha.sub(alg, &beta.compose(alg, &uinv).compose(alg, &gamma));

    let mut terms = x.terms.clone();
    terms[pos] = new_d.source.clone();
    terms[(pos + 1) % n] = new_d.target.clone();
    let mut diffs = x.diffs.clone();
    diffs[pos] = new_d;
    let prev = (pos + n - 1) % n;
    let nextp = (pos + 1) % n;
    if prev == nextp {
        // n = 2: the other differential loses the row at i and the
        // column at j simultaneously
        diffs[prev] = diffs[prev].submatrix(&keep_src, &keep_tgt);
    } else {
        diffs[prev] = diffs[prev]
            .submatrix(&keep_src, &(0..diffs[prev].source.len()).collect::<Vec<_>>());
        diffs[nextp] = diffs[nextp]
            .submatrix(&(0..diffs[nextp].target.len()).collect::<Vec<_>>(), &keep_tgt);
    }
    let next = ProjPeriodic { terms, diffs };

    let mut f1 = ProjPeriodicMap::zero(x, &next);
    let mut g1 = ProjPeriodicMap::zero(&next, x);
    for q in 0..n {
        if q == pos {
            let term = &x.terms[q];
            let mut proj = ProjMap::zero(term.clone(), next.terms[q].clone());
            for (r, &c) in keep_src.iter().enumerate() {
                proj.set(r, c, alg.elem_unit(term.summands[c]));
            }
            f1.comps[q] = proj;
            let mut incl = ProjMap::zero(next.terms[q].clone(), term.clone());
            for (c, &r) in keep_src.iter().enumerate() {
                incl.set(r, c, alg.elem_unit(term.summands[r]));
            }
            let corr = uinv.compose(alg, &gamma).neg(alg);
            for (c, _) in keep_src.iter().enumerate() {
                incl.set(i, c, corr.get(0, c).clone());
            }
            g1.comps[q] = incl;
        } else if q == (pos + 1) % n {
            let term = &x.terms[q];
            let mut proj = ProjMap::zero(term.clone(), next.terms[q].clone());
            for (r, &c) in keep_tgt.iter().enumerate() {
                proj.set(r, c, alg.elem_unit(term.summands[c]));
            }
            let corr = beta.compose(alg, &uinv).neg(alg);
            for (r, _) in keep_tgt.iter().enumerate() {
                proj.set(r, j, corr.get(r, 0).clone());
            }
            f1.comps[q] = proj;
            let mut incl = ProjMap::zero(next.terms[q].clone(), term.clone());
            for (c, &r) in keep_tgt.iter().enumerate() {
                incl.set(r, c, alg.elem_unit(term.summands[r]));
            }
            g1.comps[q] = incl;
        } else {
            f1.comps[q] = ProjMap::identity(alg, &x.terms[q]);
            g1.comps[q] = ProjMap::identity(alg, &x.terms[q]);
        }
    }
    let mut s1: Vec<ProjMap> = (0..n)
        .map(|q| ProjMap::zero(x.terms[q].clone(), x.terms[(q + n - 1) % n].clone()))
        .collect();
    let mut s_map = ProjMap::zero(x.terms[(pos + 1) % n].clone(), x.terms[pos].clone());
    s_map.set(i, j, uinv.get(0, 0).clone());
    s1[(pos + 1) % n] = s_map;
    (next, f1, g1, s1)
}

/// Elimination for period one: conjugate the differential so that the
/// cancelled pair splits off as a contractible direct summand, then
/// delete it.
fn eliminate_period_one(
    alg: &PathAlgebra,
    x: &ProjPeriodic,
    j: usize,
    i: usize,
) -> (ProjPeriodic, ProjPeriodicMap, ProjPeriodicMap, Vec<ProjMap>) {
    let module = &x.terms[0];
    let eps = &x.diffs[0];
    let m = module.len();
    let v = module.summands[i];
    let u = eps.get(j, i).clone();
    let uinv_elem = alg.elem_local_inverse(&u, v).expect("pivot is invertible");
    let uinv = unit_map(alg, v, uinv_elem.clone());
    let _ = &uinv;

    // clear row j by column operations g_a = 1 - sum E_{i,m}(u^{-1} eps_{j,m})
    let mut ga = ProjMap::identity(alg, module);
    let mut ga_inv = ProjMap::identity(alg, module);
    for c in 0..m {
        if c == i {
            continue;
        }
        let corr = alg.elem_mul(&uinv_elem, eps.get(j, c));
        ga.set(i, c, alg.elem_neg(&corr));
        ga_inv.set(i, c, corr);
    }
    let eps1 = ga_inv.compose(alg, eps).compose(alg, &ga);
    // clear column i; row i and column j vanish automatically
    let mut gb = ProjMap::identity(alg, module);
    let mut gb_inv = ProjMap::identity(alg, module);
    for r in 0..m {
        if r == j {
            continue;
        }
        let corr = alg.elem_mul(eps1.get(r, i), &uinv_elem);
        gb.set(r, j, alg.elem_neg(&corr));
        gb_inv.set(r, j, corr);
    }
    let eps2 = gb_inv.compose(alg, &eps1).compose(alg, &gb);
    debug_assert!({
        let mut clean = true;
        for r in 0..m {
            for c in 0..m {
                let deleted = r == j || r == i || c == j || c == i;
                if deleted && !(r == j && c == i) && !eps2.get(r, c).is_zero() {
                    clean = false;
                }
            }
        }
        clean
    });

    let keep: Vec<usize> = (0..m).filter(|&k| k != i && k != j).collect();
    let next = ProjPeriodic {
        terms: vec![ProjModule::new(keep.iter().map(|&k| module.summands[k]).collect())],
        diffs: vec![eps2.submatrix(&keep, &keep)],
    };

    let phi = ga.compose(alg, &gb);
    let phi_inv = gb_inv.compose(alg, &ga_inv);
    // f1 = project after phi^{-1}; g1 = phi after include
    let mut proj = ProjMap::zero(module.clone(), next.terms[0].clone());
    for (r, &c) in keep.iter().enumerate() {
        proj.set(r, c, alg.elem_unit(module.summands[c]));
    }
    let mut incl = ProjMap::zero(next.terms[0].clone(), module.clone());
    for (c, &r) in keep.iter().enumerate() {
        incl.set(r, c, alg.elem_unit(module.summands[r]));
    }
    let f1c = proj.compose(alg, &phi_inv);
    let g1c = phi.compose(alg, &incl);
    let mut s_hat = ProjMap::zero(module.clone(), module.clone());
    s_hat.set(i, j, uinv_elem);
    let s1c = phi.compose(alg, &s_hat).compose(alg, &phi_inv);

    let f1 = ProjPeriodicMap::new(x.clone(), next.clone(), vec![f1c]);
    let g1 = ProjPeriodicMap::new(next.clone(), x.clone(), vec![g1c]);
    (next, f1, g1, vec![s1c])
}

/// Check the witnesses of a periodic minimization bit-exactly.
pub fn verify_periodic_equivalence(
    alg: &PathAlgebra,
    x: &ProjPeriodic,
    min: &ProjPeriodic,
    w: &PeriodicMinWitness,
) -> bool {
    if !w.to_min.is_chain_map(alg) || !w.from_min.is_chain_map(alg) {
        return false;
    }
    let n = x.n();
    let round = w.to_min.compose(alg, &w.from_min);
    let id_min = ProjPeriodicMap::identity(alg, min);
    if round.sub(alg, &id_min).comps.iter().any(|c| !c.is_zero()) {
        return false;
    }
    let back = w.from_min.compose(alg, &w.to_min);
    (0..n).all(|q| {
        let ident = ProjMap::identity(alg, &x.terms[q]);
        let defect = ident.sub(alg, &back.comps[q]);
        let ds = x.diffs[(q + n - 1) % n].compose(alg, &w.homotopy[q]);
        let sd = w.homotopy[(q + 1) % n].compose(alg, &x.diffs[q]);
        defect.sub(alg, &ds.add(alg, &sd)).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{map1, one_periodic_p3, p, two_periodic_p2_p4};
    use super::super::{cone_periodic, ProjPeriodic, ProjPeriodicMap};
    use super::*;
    use crate::exactlin::Field;
    use crate::samples;

    #[test]
    fn contractible_cone_minimizes_to_zero() {
        let alg = samples::three_cycle_ba(Field::prime(5).unwrap());
        let pv = p(&alg, "2");
        let stalk = ProjPeriodic::differential_module(
            &alg,
            pv.clone(),
            ProjMap::zero(pv.clone(), pv.clone()),
        )
        .unwrap();
        let c = cone_periodic(&alg, &ProjPeriodicMap::identity(&alg, &stalk)).unwrap();
        let (min, w) = minimize_periodic(&alg, &c);
        assert!(min.is_zero_object());
        assert!(verify_periodic_equivalence(&alg, &c, &min, &w));
    }

    #[test]
    fn minimal_input_is_unchanged() {
        let alg = samples::four_cycle_gba(Field::rational());
        let x = one_periodic_p3(&alg);
        let (min, w) = minimize_periodic(&alg, &x);
        assert_eq!(min, x);
        assert!(verify_periodic_equivalence(&alg, &x, &min, &w));
        let alg2 = samples::four_cycle_ba_dg(Field::prime(3).unwrap());
        let y = two_periodic_p2_p4(&alg2);
        let (min2, w2) = minimize_periodic(&alg2, &y);
        assert_eq!(min2, y);
        assert!(verify_periodic_equivalence(&alg2, &y, &min2, &w2));
    }

    #[test]
    fn period_one_direct_sum_with_contractible_piece_reduces() {
        // (P2, a*g*b) ⊕ cone(-1 on (P1, 0)) minimizes back to (P2, a*g*b)
        let alg = samples::three_cycle_ba(Field::rational());
        let p1 = p(&alg, "1");
        let p2 = p(&alg, "2");
        let v2 = alg.quiver.vertex_id("2").unwrap();
        let module = p2.concat(&p1).concat(&p1);
        let mut eps = ProjMap::zero(module.clone(), module.clone());
        eps.set(0, 0, alg.parse_elem("a*g*b", Some((v2, v2))).unwrap());
        eps.set(2, 1, alg.elem_neg(&alg.elem_unit(alg.quiver.vertex_id("1").unwrap())));
        let x = ProjPeriodic::differential_module(&alg, module, eps).unwrap();
        let (min, w) = minimize_periodic(&alg, &x);
        assert!(verify_periodic_equivalence(&alg, &x, &min, &w));
        assert_eq!(min.terms[0].names(&alg), vec!["2"]);
        assert_eq!(alg.format_elem(min.diffs[0].get(0, 0)), "a*g*b");
    }

    #[test]
    fn period_two_elimination_strips_a_contractible_summand() {
        // (P2 <-> P4) ⊕ (P1 -1-> P1, 0 back) minimizes to the bare
        // 2-periodic (P2 <-> P4) pattern
        let alg = samples::four_cycle_ba_dg(Field::prime(5).unwrap());
        let p1 = p(&alg, "1");
        let v1 = alg.quiver.vertex_id("1").unwrap();
        let core = two_periodic_p2_p4(&alg);
        let t0 = core.terms[0].concat(&p1);
        let t1 = core.terms[1].concat(&p1);
        let mut d0 = ProjMap::zero(t0.clone(), t1.clone());
        d0.set(0, 0, core.diffs[0].get(0, 0).clone());
        d0.set(1, 1, alg.elem_unit(v1));
        let mut d1 = ProjMap::zero(t1.clone(), t0.clone());
        d1.set(0, 0, core.diffs[1].get(0, 0).clone());
        let x = ProjPeriodic::new(&alg, vec![t0, t1], vec![d0, d1]).unwrap();
        let (min, w) = minimize_periodic(&alg, &x);
        assert!(verify_periodic_equivalence(&alg, &x, &min, &w));
        assert!(min.is_minimal(&alg));
        assert_eq!(min, core);
    }
}
