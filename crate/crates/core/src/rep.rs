//! Explicit matrix representations of type A quivers: interval
//! indecomposables, Hom/Ext dimensions via intertwiner systems, and
//! Krull-Schmidt decomposition.

use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, Field, Mat, Rationals};
use crate::quiver::{DimVector, PositiveRoot, Quiver};
use std::collections::BTreeMap;

/// A point of E_V with chosen bases: one matrix per arrow, shaped
/// (target dim) x (source dim), over the coefficient field F.
#[derive(Debug, Clone)]
pub struct RepIn<F: Field> {
    dims: Vec<usize>,
    maps: Vec<Mat<F::Elem>>,
}

/// Representations over the exact rationals, the authoritative field for
/// Hom dimensions of quiver representations.
pub type Rep = RepIn<Rationals>;

impl<F: Field> RepIn<F> {
    pub fn new(quiver: &Quiver, dims: Vec<usize>, maps: Vec<Mat<F::Elem>>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(
                "representation data does not match quiver".into(),
            ));
        }
        for (&(s, t), m) in quiver.arrows().iter().zip(&maps) {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} -> {} carries a {}x{} matrix, expected {}x{}",
                    s + 1,
                    t + 1,
                    m.rows(),
                    m.cols(),
                    dims[t],
                    dims[s]
                )));
            }
        }
        Ok(RepIn { dims, maps })
    }

    pub fn zero(field: &F, quiver: &Quiver, d: &DimVector) -> Self {
        let dims = d.0.clone();
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Mat::new(dims[t], dims[s], field.zero()))
            .collect();
        RepIn { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn map(&self, arrow: usize) -> &Mat<F::Elem> {
        &self.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(field: &F, quiver: &Quiver, a: &Self, b: &Self) -> Self {
        let dims: Vec<usize> = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let (ma, mb) = (&a.maps[k], &b.maps[k]);
                Mat::from_fn(dims[t], dims[s], |r, c| {
                    if r < ma.rows() && c < ma.cols() {
                        ma[(r, c)].clone()
                    } else if r >= ma.rows() && c >= ma.cols() {
                        mb[(r - ma.rows(), c - ma.cols())].clone()
                    } else {
                        field.zero()
                    }
                })
            })
            .collect();
        RepIn { dims, maps }
    }

    /// True when every arrow matrix has full column rank.
    pub fn arrows_injective(&self, field: &F, quiver: &Quiver) -> bool {
        quiver
            .arrows()
            .iter()
            .enumerate()
            .all(|(k, _)| rank(field, &self.maps[k]) == self.maps[k].cols())
    }
}

/// The indecomposable I_alpha for an interval root of a type A quiver:
/// one-dimensional spaces along the interval, identity maps inside it.
/// This uniform model is valid for every orientation of A_n.
pub fn interval_module_in<F: Field>(
    field: &F,
    quiver: &Quiver,
    root: &PositiveRoot,
) -> Result<RepIn<F>> {
    let (a, b) = quiver.root_interval(root)?;
    let pos = quiver.path_position().expect("type A checked above");
    let dims: Vec<usize> = (0..quiver.vertex_count())
        .map(|v| usize::from((a..=b).contains(&pos[v])))
        .collect();
    let maps = quiver
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let inside = (a..=b).contains(&pos[s]) && (a..=b).contains(&pos[t]);
            if inside {
                Mat::new(1, 1, field.one())
            } else {
                Mat::new(dims[t], dims[s], field.zero())
            }
        })
        .collect();
    RepIn::new(quiver, dims, maps)
}

pub fn interval_module(quiver: &Quiver, root: &PositiveRoot) -> Result<Rep> {
    interval_module_in(&Rationals, quiver, root)
}

/// dim Hom(M, N): the solution space of the intertwining system
/// phi_t M_a = N_a phi_s over all arrows a: s -> t.
pub fn hom_dim_in<F: Field>(
    field: &F,
    quiver: &Quiver,
    m: &RepIn<F>,
    n: &RepIn<F>,
) -> Result<usize> {
    if m.dims.len() != quiver.vertex_count() || n.dims.len() != quiver.vertex_count() {
        return Err(Error::DimensionMismatch(
            "representations live on different quivers".into(),
        ));
    }
    let verts = quiver.vertex_count();
    let mut offsets = vec![0usize; verts + 1];
    for v in 0..verts {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[verts];
    if unknowns == 0 {
        return Ok(0);
    }
    // variable (v, r, c) = entry phi_v[r][c] with r < n_v, c < m_v
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
        let ma = &m.maps[k];
        let na = &n.maps[k];
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![field.zero(); unknowns];
                // (phi_t M_a)[r][c] = sum_x phi_t[r][x] * M_a[x][c]
                for x in 0..m.dims[t] {
                    let coeff = ma[(x, c)].clone();
                    if !field.is_zero(&coeff) {
                        let idx = var(t, r, x);
                        row[idx] = field.add(&row[idx], &coeff);
                    }
                }
                // -(N_a phi_s)[r][c] = -sum_y N_a[r][y] * phi_s[y][c]
                for y in 0..n.dims[s] {
                    let coeff = na[(r, y)].clone();
                    if !field.is_zero(&coeff) {
                        let idx = var(s, y, c);
                        row[idx] = field.sub(&row[idx], &coeff);
                    }
                }
                if row.iter().any(|e| !field.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(unknowns);
    }
    let mat = Mat::from_rows(rows);
    Ok(kernel(field, &mat).len())
}

pub fn hom_dim(quiver: &Quiver, m: &Rep, n: &Rep) -> Result<usize> {
    hom_dim_in(&Rationals, quiver, m, n)
}

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N> for hereditary algebras.
pub fn ext_dim(quiver: &Quiver, m: &Rep, n: &Rep) -> Result<usize> {
    let hom = hom_dim(quiver, m, n)? as i64;
    let euler = quiver.euler_form(&m.dim_vector(), &n.dim_vector());
    let ext = hom - euler;
    if ext < 0 {
        return Err(Error::Internal(format!(
            "negative Ext dimension {ext}: solver and Euler form disagree"
        )));
    }
    Ok(ext as usize)
}

/// Pairwise Hom dimensions between interval indecomposables, together with
/// a topological order in which the table is unitriangular. Dynkin path
/// algebras are representation-directed, so the order always exists; it is
/// verified empirically here rather than assumed.
pub struct HomTable {
    pub roots: Vec<PositiveRoot>,
    /// hom[i][j] = dim Hom(I_{roots[i]}, I_{roots[j]})
    pub hom: Vec<Vec<usize>>,
    /// indices into `roots` such that hom(order[r], order[c]) != 0 with
    /// r != c implies c < r (lower triangular with unit diagonal)
    pub topo: Vec<usize>,
}

impl HomTable {
    pub fn build(quiver: &Quiver) -> Result<HomTable> {
        let roots = quiver.positive_roots();
        let modules: Vec<Rep> = roots
            .iter()
            .map(|r| interval_module(quiver, r))
            .collect::<Result<_>>()?;
        let k = roots.len();
        let mut hom = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                hom[i][j] = hom_dim(quiver, &modules[i], &modules[j])?;
            }
        }
        // Kahn topological sort of the directed graph i -> j when
        // hom(i, j) != 0, i != j; deterministic tie-break by root order.
        let mut out_deg = vec![0usize; k];
        for i in 0..k {
            for j in 0..k {
                if i != j && hom[i][j] != 0 {
                    out_deg[i] += 1;
                }
            }
        }
        let mut topo = Vec::with_capacity(k);
        let mut used = vec![false; k];
        for _ in 0..k {
            let next = (0..k).find(|&i| !used[i] && out_deg[i] == 0).ok_or_else(|| {
                Error::Internal("hom relation between indecomposables has a cycle".into())
            })?;
            used[next] = true;
            topo.push(next);
            for i in 0..k {
                if !used[i] && hom[i][next] != 0 {
                    out_deg[i] -= 1;
                }
            }
        }
        for (r, &ir) in topo.iter().enumerate() {
            for (c, &ic) in topo.iter().enumerate() {
                if hom[ir][ic] != 0 && c > r {
                    return Err(Error::Internal(
                        "hom table is not triangular in topological order".into(),
                    ));
                }
            }
            if hom[ir][ir] != 1 {
                return Err(Error::Internal(
                    "interval module has endomorphism ring larger than the base field".into(),
                ));
            }
        }
        Ok(HomTable { roots, hom, topo })
    }
}

/// Multiplicities of the indecomposable summands of M, solved from the
/// unitriangular system hom(I_alpha, M) = sum_beta m_beta hom(I_alpha, I_beta).
pub fn decompose_in<F: Field>(
    field: &F,
    quiver: &Quiver,
    m: &RepIn<F>,
    table: &HomTable,
) -> Result<BTreeMap<PositiveRoot, usize>> {
    let k = table.roots.len();
    let mut h = vec![0i64; k];
    for (i, root) in table.roots.iter().enumerate() {
        let module = interval_module_in(field, quiver, root)?;
        h[i] = hom_dim_in(field, quiver, &module, m)? as i64;
    }
    let mut mult = vec![0i64; k];
    for (r, &ir) in table.topo.iter().enumerate() {
        let mut val = h[ir];
        for (c, &ic) in table.topo.iter().enumerate().take(r) {
            val -= (table.hom[ir][ic] as i64) * mult[c];
        }
        if val < 0 {
            return Err(Error::Internal(format!(
                "decomposition produced negative multiplicity {val} for {}",
                table.roots[ir].dim_vector()
            )));
        }
        mult[r] = val;
    }
    let mut out = BTreeMap::new();
    let mut check = DimVector::zero(quiver.vertex_count());
    for (r, &ir) in table.topo.iter().enumerate() {
        if mult[r] > 0 {
            out.insert(table.roots[ir].clone(), mult[r] as usize);
            check = check.add(&table.roots[ir].dim_vector().scaled(mult[r] as usize));
        }
    }
    if check != m.dim_vector() {
        return Err(Error::Internal(
            "decomposition multiplicities do not reassemble the dimension vector".into(),
        ));
    }
    Ok(out)
}

pub fn decompose(quiver: &Quiver, m: &Rep) -> Result<BTreeMap<PositiveRoot, usize>> {
    let table = HomTable::build(quiver)?;
    decompose_in(&Rationals, quiver, m, &table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn root(q: &Quiver, a: usize, b: usize) -> PositiveRoot {
        q.interval_root(a - 1, b - 1).unwrap()
    }

    #[test]
    fn a2_interval_modules() {
        let q = Quiver::linear_a(2);
        let m = interval_module(&q, &root(&q, 1, 2)).unwrap();
        assert_eq!(m.dims(), &[1, 1]);
        assert_eq!(m.map(0)[(0, 0)], Rationals.one());
        let simple = interval_module(&q, &root(&q, 1, 1)).unwrap();
        assert_eq!(simple.dims(), &[1, 0]);
    }

    #[test]
    fn a5_middle_simple_has_zero_arrows() {
        let q = Quiver::linear_a(5);
        let m = interval_module(&q, &root(&q, 3, 3)).unwrap();
        assert_eq!(m.dims(), &[0, 0, 1, 0, 0]);
        for k in 0..4 {
            assert_eq!(m.map(k).rows() * m.map(k).cols(), 0);
        }
    }

    #[test]
    fn a2_hom_dims_by_hand() {
        let q = Quiver::linear_a(2);
        let i12 = interval_module(&q, &root(&q, 1, 2)).unwrap();
        let i1 = interval_module(&q, &root(&q, 1, 1)).unwrap();
        let i2 = interval_module(&q, &root(&q, 2, 2)).unwrap();
        assert_eq!(hom_dim(&q, &i12, &i1).unwrap(), 1);
        assert_eq!(hom_dim(&q, &i1, &i12).unwrap(), 0);
        assert_eq!(hom_dim(&q, &i2, &i12).unwrap(), 1);
        assert_eq!(hom_dim(&q, &i12, &i2).unwrap(), 0);
        // ext(I_1, I_2) = hom - euler = 0 - (-1) = 1
        assert_eq!(ext_dim(&q, &i1, &i2).unwrap(), 1);
        assert_eq!(ext_dim(&q, &i2, &i1).unwrap(), 0);
    }

    #[test]
    fn hom_euler_consistency_and_sum_additivity() {
        let q = Quiver::flag_quiver(2); // A3: 1 -> 2 <- 3
        let roots = q.positive_roots();
        let mods: Vec<Rep> = roots
            .iter()
            .map(|r| interval_module(&q, r).unwrap())
            .collect();
        for a in &mods {
            for b in &mods {
                let hom = hom_dim(&q, a, b).unwrap() as i64;
                let ext = ext_dim(&q, a, b).unwrap() as i64;
                assert_eq!(hom - ext, q.euler_form(&a.dim_vector(), &b.dim_vector()));
            }
        }
        let sum = RepIn::direct_sum(&Rationals, &q, &mods[0], &mods[1]);
        for b in &mods {
            assert_eq!(
                hom_dim(&q, &sum, b).unwrap(),
                hom_dim(&q, &mods[0], b).unwrap() + hom_dim(&q, &mods[1], b).unwrap()
            );
            assert_eq!(
                hom_dim(&q, b, &sum).unwrap(),
                hom_dim(&q, b, &mods[0]).unwrap() + hom_dim(&q, b, &mods[1]).unwrap()
            );
        }
        // hom(M, M) >= number of summands
        assert!(hom_dim(&q, &sum, &sum).unwrap() >= 2);
    }

    #[test]
    fn generic_a2_extension_is_the_long_interval() {
        let q = Quiver::linear_a(2);
        let m = RepIn::new(&q, vec![1, 1], vec![Mat::new(1, 1, Rationals.from_i64(5))]).unwrap();
        let dec = decompose(&q, &m).unwrap();
        let expected: BTreeMap<PositiveRoot, usize> = [(root(&q, 1, 2), 1)].into_iter().collect();
        assert_eq!(dec, expected);
    }

    #[test]
    fn decompose_direct_sum_on_a3() {
        let q = Quiver::linear_a(3);
        let a = interval_module(&q, &root(&q, 1, 2)).unwrap();
        let b = interval_module(&q, &root(&q, 2, 3)).unwrap();
        let m = RepIn::direct_sum(&Rationals, &q, &a, &b);
        let dec = decompose(&q, &m).unwrap();
        let expected: BTreeMap<PositiveRoot, usize> =
            [(root(&q, 1, 2), 1), (root(&q, 2, 3), 1)].into_iter().collect();
        assert_eq!(dec, expected);
    }

    #[test]
    fn interval_modules_decompose_to_themselves_on_a5() {
        let q = Quiver::linear_a(5);
        let table = HomTable::build(&q).unwrap();
        for r in q.positive_roots() {
            let m = interval_module(&q, &r).unwrap();
            let dec = decompose_in(&Rationals, &q, &m, &table).unwrap();
            assert_eq!(dec.len(), 1);
            assert_eq!(dec.get(&r), Some(&1));
        }
    }

    #[test]
    fn hom_table_is_triangular_for_mixed_orientations() {
        for q in [Quiver::linear_a(4), Quiver::flag_quiver(3)] {
            let table = HomTable::build(&q).unwrap();
            assert_eq!(table.roots.len(), table.topo.len());
        }
    }
}
