//! Connection 1-forms in an orthonormal frame, their curvature, Ricci
//! tensors, and the identities relating the Levi-Civita, Bismut and
//! opposite-torsion connections.

use std::fmt;

use crate::error::Result;
use crate::exterior::{KForm, DIM};
use crate::frames::StructureEquations;
use crate::hermitian::{AlmostComplexStructure, HermitianStructure};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum ConnectionKind {
    LeviCivita,
    Plus,
    Minus,
    Chern,
    Custom,
}

impl ConnectionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConnectionKind::LeviCivita => "lc",
            ConnectionKind::Plus => "plus",
            ConnectionKind::Minus => "minus",
            ConnectionKind::Chern => "chern",
            ConnectionKind::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Option<ConnectionKind> {
        match s {
            "lc" | "g" | "levi-civita" => Some(ConnectionKind::LeviCivita),
            "plus" | "+" => Some(ConnectionKind::Plus),
            "minus" | "-" => Some(ConnectionKind::Minus),
            "chern" | "c" => Some(ConnectionKind::Chern),
            _ => None,
        }
    }
}

impl fmt::Display for ConnectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dense tensor with every index ranging over the frame.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    rank: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(rank: usize) -> Tensor {
        Tensor {
            rank,
            data: vec![Scalar::zero(); DIM.pow(rank as u32)],
        }
    }

    pub fn from_fn(rank: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Tensor {
        let mut t = Tensor::zeros(rank);
        let mut ix = vec![0; rank];
        for slot in 0..t.data.len() {
            let mut rem = slot;
            for p in (0..rank).rev() {
                ix[p] = rem % DIM;
                rem /= DIM;
            }
            t.data[slot] = f(&ix);
        }
        t
    }

    /// Components `alpha(E_i, E_j, ...)` of a form.
    pub fn from_form(alpha: &KForm) -> Tensor {
        Tensor::from_fn(alpha.degree(), |ix| alpha.eval_basis(ix))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, ix: &[usize]) -> usize {
        debug_assert_eq!(ix.len(), self.rank);
        ix.iter().fold(0, |acc, &i| acc * DIM + i)
    }

    pub fn get(&self, ix: &[usize]) -> &Scalar {
        &self.data[self.offset(ix)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero components in index order.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, Scalar)> {
        let mut out = Vec::new();
        Tensor::from_fn(self.rank, |ix| {
            let v = self.get(ix);
            if !v.is_zero() {
                out.push((ix.to_vec(), v.clone()));
            }
            Scalar::zero()
        });
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        Tensor {
            rank: self.rank,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `omega[i][j]` is the 1-form `omega^i_j`, with `nabla_X E_j = sum_i omega^i_j(X) E_i`.
/// The matrix size is the rank of the bundle (6 for the tangent bundle).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Connection {
    kind: ConnectionKind,
    forms: Vec<Vec<KForm>>,
}

impl Connection {
    pub fn new(kind: ConnectionKind, forms: Vec<Vec<KForm>>) -> Connection {
        let forms = forms
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|f| if f.is_zero() { KForm::zero(1) } else { f })
                    .collect()
            })
            .collect();
        Connection { kind, forms }
    }

    /// Builds `omega^i_j = sum_k c(i, j, k) e^k` on the tangent bundle.
    pub fn from_components(
        kind: ConnectionKind,
        mut c: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Connection {
        let forms = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| KForm::from_components(1, |k| c(i, j, k[0])))
                    .collect()
            })
            .collect();
        Connection::new(kind, forms)
    }

    pub fn zero(rank: usize) -> Connection {
        Connection::new(
            ConnectionKind::Custom,
            vec![vec![KForm::zero(1); rank]; rank],
        )
    }

    pub fn kind(&self) -> ConnectionKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.forms.len()
    }

    pub fn form(&self, i: usize, j: usize) -> &KForm {
        &self.forms[i][j]
    }

    /// `omega^i_j(E_k)`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.forms[i][j].eval_basis(&[k])
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (i..n).all(|j| self.forms[i][j] == -&self.forms[j][i]))
    }

    /// `Omega^i_j = d omega^i_j + sum_k omega^i_k ^ omega^k_j`.
    pub fn curvature(&self, eqs: &StructureEquations) -> Curvature {
        let n = self.rank();
        let forms = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut omega = eqs.d(&self.forms[i][j]);
                        for k in 0..n {
                            if self.forms[i][k].is_zero() || self.forms[k][j].is_zero() {
                                continue;
                            }
                            omega += &self.forms[i][k].wedge(&self.forms[k][j]);
                        }
                        omega
                    })
                    .collect()
            })
            .collect();
        Curvature::new(forms)
    }

    /// `(nabla_{E_x} S)_{y1..yr} = -sum_p S(.., nabla_{E_x} E_{y_p}, ..)` for a
    /// tensor with constant components; the derivative index comes first.
    pub fn covariant_derivative(&self, s: &Tensor) -> Tensor {
        let gamma = Tensor::from_fn(3, |ix| self.coefficient(ix[0], ix[1], ix[2]));
        let r = s.rank();
        Tensor::from_fn(r + 1, |ix| {
            let (x, ys) = (ix[0], &ix[1..]);
            let mut acc = Scalar::zero();
            let mut moved = ys.to_vec();
            for p in 0..r {
                for i in 0..DIM {
                    let g = gamma.get(&[i, ys[p], x]);
                    if g.is_zero() {
                        continue;
                    }
                    moved[p] = i;
                    acc -= &(g * s.get(&moved));
                }
                moved[p] = ys[p];
            }
            acc
        })
    }
}

/// Levi-Civita connection: `omega^i_j(E_k) = (a^i_{jk} - a^k_{ij} + a^j_{ki}) / 2`.
pub fn levi_civita(eqs: &StructureEquations) -> Connection {
    let half = Scalar::from_ratio(1, 2);
    Connection::from_components(ConnectionKind::LeviCivita, |i, j, k| {
        let s = &(&eqs.coefficient(i, j, k) - &eqs.coefficient(k, i, j)) + &eqs.coefficient(j, k, i);
        &s * &half
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// `nabla^{+-} = nabla^g +- T/2`: `g(nabla^+_X Y, Z) = g(nabla^g_X Y, Z) + T(X, Y, Z)/2`,
/// i.e. `omega^i_j(E_k) = omega^g(E_k) -+ T(E_i, E_j, E_k)/2`.
pub fn torsion_connection(h: &HermitianStructure, sign: Sign) -> Result<Connection> {
    let lc = levi_civita(&h.geometry.structure);
    let t = h.torsion_3form()?;
    let (kind, factor) = match sign {
        Sign::Plus => (ConnectionKind::Plus, Scalar::from_ratio(-1, 2)),
        Sign::Minus => (ConnectionKind::Minus, Scalar::from_ratio(1, 2)),
    };
    Ok(Connection::from_components(kind, |i, j, k| {
        &lc.coefficient(i, j, k) + &(&t.eval_basis(&[i, j, k]) * &factor)
    }))
}

/// Chern connection: `omega^i_j(E_k) = omega^g(E_k) - dF(J E_k, E_i, E_j)/2`.
/// With `F(X, Y) = g(X, JY)` this is the sign that makes `nabla J = 0`.
pub fn chern(h: &HermitianStructure) -> Connection {
    let lc = levi_civita(&h.geometry.structure);
    let df = h.d(&h.f);
    let half = Scalar::from_ratio(1, 2);
    let c: Vec<KForm> = (0..DIM)
        .map(|k| df.interior(&h.j.apply_basis(k)))
        .collect();
    Connection::from_components(ConnectionKind::Chern, |i, j, k| {
        let v = c[k].eval_basis(&[i, j]);
        &lc.coefficient(i, j, k) - &(&v * &half)
    })
}

/// One of the four canonical connections of a Hermitian structure.
pub fn connection(h: &HermitianStructure, kind: ConnectionKind) -> Result<Connection> {
    match kind {
        ConnectionKind::LeviCivita | ConnectionKind::Custom => {
            Ok(levi_civita(&h.geometry.structure))
        }
        ConnectionKind::Plus => torsion_connection(h, Sign::Plus),
        ConnectionKind::Minus => torsion_connection(h, Sign::Minus),
        ConnectionKind::Chern => Ok(chern(h)),
    }
}

/// `forms[i][j]` is the 2-form `Omega^i_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Curvature {
    forms: Vec<Vec<KForm>>,
}

impl Curvature {
    pub fn new(forms: Vec<Vec<KForm>>) -> Curvature {
        let forms = forms
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|f| if f.is_zero() { KForm::zero(2) } else { f })
                    .collect()
            })
            .collect();
        Curvature { forms }
    }

    pub fn rank(&self) -> usize {
        self.forms.len()
    }

    pub fn form(&self, i: usize, j: usize) -> &KForm {
        &self.forms[i][j]
    }

    pub fn forms(&self) -> impl Iterator<Item = (usize, usize, &KForm)> {
        self.forms
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, f)| (i, j, f)))
    }

    pub fn is_zero(&self) -> bool {
        self.forms().all(|(_, _, f)| f.is_zero())
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (i..n).all(|j| self.forms[i][j] == -&self.forms[j][i]))
    }

    pub fn map(&self, mut f: impl FnMut(&KForm) -> KForm) -> Curvature {
        Curvature::new(
            self.forms
                .iter()
                .map(|row| row.iter().map(&mut f).collect())
                .collect(),
        )
    }

    /// `R_{ijkl} = Omega^l_k(E_i, E_j)` for tangent-bundle curvature.
    pub fn tensor(&self) -> Tensor {
        Tensor::from_fn(4, |ix| self.forms[ix[3]][ix[2]].eval_basis(&[ix[0], ix[1]]))
    }

    /// `Ric_{mn} = sum_i R_{imni}`.
    pub fn ricci(&self) -> RicciTensor {
        RicciTensor {
            entries: Tensor::from_fn(2, |ix| {
                let mut acc = Scalar::zero();
                for i in 0..DIM {
                    acc += &self.forms[i][ix[1]].eval_basis(&[i, ix[0]]);
                }
                acc
            }),
        }
    }

    /// `sum_{i,j} J^j_i Omega^i_j`, the curvature traced against `J`.
    pub fn j_trace(&self, j: &AlmostComplexStructure) -> KForm {
        let mut acc = KForm::zero(2);
        for a in 0..DIM {
            for b in 0..DIM {
                let c = j.entry(b, a);
                if !c.is_zero() {
                    acc += &self.forms[a][b].scale(c);
                }
            }
        }
        acc
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RicciTensor {
    entries: Tensor,
}

impl RicciTensor {
    pub fn get(&self, m: usize, n: usize) -> &Scalar {
        self.entries.get(&[m, n])
    }

    pub fn tensor(&self) -> &Tensor {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..DIM).all(|m| (m..DIM).all(|n| self.get(m, n) == self.get(n, m)))
    }
}

/// `sum_{p,q} T_{mpq} T_{npq}`.
pub fn torsion_square(t: &Tensor) -> Tensor {
    Tensor::from_fn(2, |ix| {
        let mut acc = Scalar::zero();
        for p in 0..DIM {
            for q in 0..DIM {
                let a = t.get(&[ix[0], p, q]);
                if !a.is_zero() {
                    acc += &(a * t.get(&[ix[1], p, q]));
                }
            }
        }
        acc
    })
}

/// `sum_s (nabla_{E_s} T)_{s m n}` from a precomputed covariant derivative.
pub fn divergence(nabla_t: &Tensor) -> Tensor {
    Tensor::from_fn(2, |ix| {
        let mut acc = Scalar::zero();
        for s in 0..DIM {
            acc += nabla_t.get(&[s, s, ix[0], ix[1]]);
        }
        acc
    })
}

/// The Ricci identities, the `(2,2)` type of `dT`, the curvature identity
/// `dT_{ijkl} = 2 R+_{ijkl} - 2 R-_{klij}` and the holonomy condition, at
/// constant dilaton.
pub fn structural_identities(h: &HermitianStructure) -> Result<Vec<VerificationReport>> {
    let eqs = &h.geometry.structure;
    let t_form = h.torsion_3form()?;
    let dt_form = h.d(&t_form);
    let t = Tensor::from_form(&t_form);
    let dt = Tensor::from_form(&dt_form);
    let f = Tensor::from_form(&h.f);

    let lc = levi_civita(eqs);
    let plus = torsion_connection(h, Sign::Plus)?;
    let minus = torsion_connection(h, Sign::Minus)?;
    let cur_g = lc.curvature(eqs);
    let cur_plus = plus.curvature(eqs);
    let cur_minus = minus.curvature(eqs);
    let ric_g = cur_g.ricci();
    let ric_plus = cur_plus.ricci();
    let tt = torsion_square(&t);
    let div_plus = divergence(&plus.covariant_derivative(&t));
    let div_g = divergence(&lc.covariant_derivative(&t));
    let quarter = Scalar::from_ratio(1, 4);
    let half = Scalar::from_ratio(1, 2);

    let mut reports = Vec::new();

    let dt_jj = h.j.pullback(&dt_form);
    reports.push(VerificationReport::form("dT-type-2-2", &dt_jj - &dt_form));

    let ric_from_dt = Tensor::from_fn(2, |ix| {
        let (m, n) = (ix[0], ix[1]);
        let mut acc = Scalar::zero();
        for s in 0..DIM {
            let js = h.j.entry(s, n);
            if js.is_zero() {
                continue;
            }
            for p in 0..DIM {
                for q in 0..DIM {
                    let fpq = f.get(&[p, q]);
                    if !fpq.is_zero() {
                        acc += &(&(dt.get(&[m, s, p, q]) * js) * fpq);
                    }
                }
            }
        }
        ric_plus.get(m, n) + &(&acc * &quarter)
    });
    reports.push(VerificationReport::components(
        "ricci-plus-from-dT",
        ric_from_dt.nonzero(),
    ));

    let first = Tensor::from_fn(2, |ix| {
        let (m, n) = (ix[0], ix[1]);
        let rhs = &(ric_plus.get(m, n) + &(tt.get(ix) * &quarter))
            - &(div_plus.get(ix) * &half);
        ric_g.get(m, n) - &rhs
    });
    reports.push(VerificationReport::components(
        "ricci-lc-vs-plus",
        first.nonzero(),
    ));

    let skew_plus = Tensor::from_fn(2, |ix| {
        &(ric_plus.get(ix[0], ix[1]) - ric_plus.get(ix[1], ix[0])) - div_plus.get(ix)
    });
    reports.push(VerificationReport::components(
        "ricci-plus-skew-divergence-plus",
        skew_plus.nonzero(),
    ));
    let skew_g = Tensor::from_fn(2, |ix| {
        &(ric_plus.get(ix[0], ix[1]) - ric_plus.get(ix[1], ix[0])) - div_g.get(ix)
    });
    reports.push(VerificationReport::components(
        "ricci-plus-skew-divergence-lc",
        skew_g.nonzero(),
    ));

    let sym = Tensor::from_fn(2, |ix| {
        let (m, n) = (ix[0], ix[1]);
        let avg = &(ric_plus.get(m, n) + ric_plus.get(n, m)) * &half;
        &(ric_g.get(m, n) - &avg) - &(tt.get(ix) * &quarter)
    });
    reports.push(VerificationReport::components(
        "ricci-lc-symmetrized-plus",
        sym.nonzero(),
    ));

    let r_plus = cur_plus.tensor();
    let r_minus = cur_minus.tensor();
    let two = Scalar::from_int(2);
    let bianchi = Tensor::from_fn(4, |ix| {
        let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
        let rhs = &(r_plus.get(ix) - r_minus.get(&[k, l, i, j])) * &two;
        dt.get(ix) - &rhs
    });
    reports.push(VerificationReport::components(
        "dT-from-plus-minus-curvature",
        bianchi.nonzero(),
    ));

    reports.push(VerificationReport::form(
        "holonomy-su3",
        cur_plus.j_trace(&h.j),
    ));
    Ok(reports)
}

/// `nabla^+ T` as a report.
pub fn torsion_parallel(h: &HermitianStructure) -> Result<VerificationReport> {
    let t = Tensor::from_form(&h.torsion_3form()?);
    let plus = torsion_connection(h, Sign::Plus)?;
    Ok(VerificationReport::components(
        "plus-torsion-parallel",
        plus.covariant_derivative(&t).nonzero(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Vector;
    use crate::frames::{PresetGeometry, PresetName};
    use crate::notation::parse_form;

    fn form(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    fn hermitian(name: PresetName) -> HermitianStructure {
        HermitianStructure::new(&PresetGeometry::symbolic(name))
    }

    fn curvature_of(name: PresetName, kind: ConnectionKind) -> Curvature {
        let h = hermitian(name);
        connection(&h, kind).unwrap().curvature(&h.geometry.structure)
    }

    #[test]
    fn printed_curvature_samples() {
        use ConnectionKind::*;
        use PresetName::*;
        assert_eq!(
            *curvature_of(Iwasawa, LeviCivita).form(0, 1),
            form("t^2/2*(e34 - e56)")
        );
        assert_eq!(*curvature_of(H3, LeviCivita).form(0, 1), form("-t^2*(3*e12 - 2*e34)"));
        assert_eq!(*curvature_of(H3, Plus).form(0, 1), form("-4*t^2*(e12 - e34)"));
        assert_eq!(*curvature_of(Iwasawa, Minus).form(0, 1), form("-2*t^2*e56"));
        assert!(curvature_of(Iwasawa, Chern).is_zero());
        assert_eq!(*curvature_of(H19Minus, Chern).form(0, 1), form("-2*e34 - 2*e56"));
        assert_eq!(*curvature_of(H6, Plus).form(0, 1), form("2*t^2*(e34 + e56)"));
        assert_eq!(
            *curvature_of(H2H4H5, Plus).form(4, 5),
            form("-2*t^2*e12 - 2*t^2*e34")
        );
        assert!(curvature_of(Torus, Plus).is_zero());
    }

    #[test]
    fn metric_connections_are_antisymmetric() {
        for name in PresetName::ALL {
            let h = hermitian(name);
            for kind in [
                ConnectionKind::LeviCivita,
                ConnectionKind::Plus,
                ConnectionKind::Minus,
                ConnectionKind::Chern,
            ] {
                let c = connection(&h, kind).unwrap();
                assert!(c.is_antisymmetric(), "{name} {kind}");
                assert!(c.curvature(&h.geometry.structure).is_antisymmetric(), "{name} {kind}");
            }
        }
    }

    #[test]
    fn hermitian_connections_preserve_j() {
        for name in PresetName::ALL {
            let h = hermitian(name);
            for kind in [ConnectionKind::Plus, ConnectionKind::Chern] {
                let c = connection(&h, kind).unwrap();
                for k in 0..DIM {
                    for i in 0..DIM {
                        for j in 0..DIM {
                            // (omega J)^i_j = (J omega)^i_j
                            let mut lhs = Scalar::zero();
                            let mut rhs = Scalar::zero();
                            for l in 0..DIM {
                                lhs += &(&c.coefficient(i, l, k) * h.j.entry(l, j));
                                rhs += &(h.j.entry(i, l) * &c.coefficient(l, j, k));
                            }
                            assert_eq!(lhs, rhs, "{name} {kind}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn plus_minus_differ_by_torsion() {
        for name in PresetName::ALL {
            let h = hermitian(name);
            let t = h.torsion_3form().unwrap();
            let p = torsion_connection(&h, Sign::Plus).unwrap();
            let m = torsion_connection(&h, Sign::Minus).unwrap();
            for i in 0..DIM {
                for j in 0..DIM {
                    for k in 0..DIM {
                        let diff = &p.coefficient(i, j, k) - &m.coefficient(i, j, k);
                        assert_eq!(diff, -t.eval_basis(&[i, j, k]), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn bismut_connection_has_torsion_t() {
        // T^+(X, Y) = nabla_X Y - nabla_Y X - [X, Y] lowered equals T(X, Y, .)
        for name in PresetName::ALL {
            let h = hermitian(name);
            let eqs = &h.geometry.structure;
            let t = h.torsion_3form().unwrap();
            let p = torsion_connection(&h, Sign::Plus).unwrap();
            for x in 0..DIM {
                for y in 0..DIM {
                    let br = eqs.bracket_basis(x, y);
                    for z in 0..DIM {
                        let tor = &(&p.coefficient(z, y, x) - &p.coefficient(z, x, y)) - &br.0[z];
                        assert_eq!(tor, t.eval_basis(&[x, y, z]), "{name}");
                    }
                }
            }
        }
    }

    /// Riemann tensor straight from the Koszul formula on brackets.
    fn koszul_ricci(eqs: &StructureEquations) -> Vec<Vec<Scalar>> {
        let g = |u: &Vector, v: &Vector| {
            let mut acc = Scalar::zero();
            for i in 0..DIM {
                acc += &(&u.0[i] * &v.0[i]);
            }
            acc
        };
        let e = Vector::basis;
        // nabla_{E_a} E_b
        let nab = |a: usize, b: usize| -> Vector {
            Vector(std::array::from_fn(|c| {
                let s = &(&g(&eqs.bracket(&e(a), &e(b)), &e(c))
                    - &g(&eqs.bracket(&e(b), &e(c)), &e(a)))
                    + &g(&eqs.bracket(&e(c), &e(a)), &e(b));
                &s * &Scalar::from_ratio(1, 2)
            }))
        };
        let nab_vec = |a: &Vector, v: &Vector| -> Vector {
            let mut out = Vector::zero();
            for x in 0..DIM {
                for y in 0..DIM {
                    let c = &a.0[x] * &v.0[y];
                    if !c.is_zero() {
                        out = &out + &nab(x, y).scale(&c);
                    }
                }
            }
            out
        };
        let riem = |i: usize, j: usize, k: usize| -> Vector {
            let a = nab_vec(&e(i), &nab(j, k));
            let b = nab_vec(&e(j), &nab(i, k));
            let c = nab_vec(&eqs.bracket(&e(i), &e(j)), &e(k));
            &(&a - &b) - &c
        };
        (0..DIM)
            .map(|m| {
                (0..DIM)
                    .map(|n| {
                        let mut acc = Scalar::zero();
                        for i in 0..DIM {
                            acc += &riem(i, m, n).0[i];
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ricci_matches_koszul_oracle() {
        for name in PresetName::ALL {
            let eqs = PresetGeometry::symbolic(name).structure;
            let ric = levi_civita(&eqs).curvature(&eqs).ricci();
            let oracle = koszul_ricci(&eqs);
            for m in 0..DIM {
                for n in 0..DIM {
                    assert_eq!(ric.get(m, n), &oracle[m][n], "{name} ({m},{n})");
                }
            }
            assert!(ric.is_symmetric());
        }
    }

    #[test]
    fn first_bianchi_for_levi_civita() {
        for name in PresetName::ALL {
            let eqs = PresetGeometry::symbolic(name).structure;
            let r = levi_civita(&eqs).curvature(&eqs).tensor();
            for i in 0..DIM {
                for j in 0..DIM {
                    for k in 0..DIM {
                        for l in 0..DIM {
                            let s = &(r.get(&[i, j, k, l]) + r.get(&[j, k, i, l])) + r.get(&[k, i, j, l]);
                            assert!(s.is_zero(), "{name}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn structural_identities_hold_on_presets() {
        for name in PresetName::ALL {
            for r in structural_identities(&hermitian(name)).unwrap() {
                assert!(r.passed(), "{name} {}: {}", r.name, r.residual);
            }
        }
        assert!(torsion_parallel(&hermitian(PresetName::H3)).unwrap().passed());
    }
}
