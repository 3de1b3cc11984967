//! The quadratic curvature identities of the gravitino equation and the
//! string-frame equations of motion at constant dilaton.
//!
//! Everything is evaluated in the orthonormal frame, so indices are raised
//! and lowered trivially.

use crate::anomaly::{solve_alpha_prime, InstantonBundle, InstantonKind, PontrjaginForm};
use crate::connections::{
    connection, divergence, levi_civita, torsion_square, ConnectionKind, Curvature, Tensor,
};
use crate::error::{Error, Result};
use crate::exterior::{KForm, DIM};
use crate::frames::{Params, PresetGeometry, PresetName};
use crate::hermitian::{AlmostComplexStructure, HermitianStructure};
use crate::report::{AlphaPrime, VerificationReport};
use crate::scalar::{rational, Scalar};

/// `R_{ijab} = Omega^b_a(E_i, E_j)`: two frame indices followed by two
/// bundle indices ranging over `0..rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurvatureTensor4 {
    rank: usize,
    entries: Vec<Scalar>,
}

impl CurvatureTensor4 {
    pub fn new(cur: &Curvature) -> CurvatureTensor4 {
        let rank = cur.rank();
        let mut entries = Vec::with_capacity(DIM * DIM * rank * rank);
        for i in 0..DIM {
            for j in 0..DIM {
                for a in 0..rank {
                    for b in 0..rank {
                        entries.push(cur.form(b, a).eval_basis(&[i, j]));
                    }
                }
            }
        }
        CurvatureTensor4 { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize, a: usize, b: usize) -> &Scalar {
        let n = self.rank;
        &self.entries[((i * DIM + j) * n + a) * n + b]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.rank;
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                (0..n).all(|a| {
                    (0..n).all(|b| {
                        let v = self.get(i, j, a, b);
                        *v == -self.get(j, i, a, b) && *v == -self.get(i, j, b, a)
                    })
                })
            })
        })
    }

    /// `G[x][y][z][w] = sum_{a,b} R_{xyab} R_{zwab}`.
    fn gram(&self) -> Vec<Scalar> {
        let n = self.rank;
        let mut out = vec![Scalar::zero(); DIM.pow(4)];
        for x in 0..DIM {
            for y in 0..DIM {
                for z in 0..DIM {
                    for w in 0..DIM {
                        let mut acc = Scalar::zero();
                        for a in 0..n {
                            for b in 0..n {
                                let l = self.get(x, y, a, b);
                                if l.is_zero() {
                                    continue;
                                }
                                let r = self.get(z, w, a, b);
                                if !r.is_zero() {
                                    acc += &(l * r);
                                }
                            }
                        }
                        out[((x * DIM + y) * DIM + z) * DIM + w] = acc;
                    }
                }
            }
        }
        out
    }

    /// `sum_q sum_{a<b} R_{mqab} R_{nqab}`.
    pub fn square(&self) -> Tensor {
        let g = self.gram();
        Tensor::from_fn(2, |ix| {
            let mut acc = Scalar::zero();
            for q in 0..DIM {
                acc += &g[gix(ix[0], q, ix[1], q)];
            }
            acc.scale(&rational(1, 2))
        })
    }

    /// `J^s_m J^p_n R_{spab} = R_{mnab}` for every bundle pair.
    pub fn is_type_11(&self, j: &AlmostComplexStructure) -> bool {
        let n = self.rank;
        for m in 0..DIM {
            for k in 0..DIM {
                for a in 0..n {
                    for b in 0..n {
                        let mut acc = Scalar::zero();
                        for s in 0..DIM {
                            for p in 0..DIM {
                                let c = j.entry(s, m) * j.entry(p, k);
                                if !c.is_zero() {
                                    acc += &(&c * self.get(s, p, a, b));
                                }
                            }
                        }
                        if acc != *self.get(m, k, a, b) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn gix(x: usize, y: usize, z: usize, w: usize) -> usize {
    ((x * DIM + y) * DIM + z) * DIM + w
}

/// Components of `LHS - RHS` of the gravitino identity
/// `1/2 [R_msab R_pqab + R_mpab R_qsab + R_mqab R_spab] F^pq J^s_n = R_mpab R_npab`.
pub fn identity_15_residual(r: &CurvatureTensor4, j: &AlmostComplexStructure) -> Tensor {
    let g = r.gram();
    Tensor::from_fn(2, |ix| {
        let (m, n) = (ix[0], ix[1]);
        let mut lhs = Scalar::zero();
        for s in 0..DIM {
            let js = j.entry(s, n);
            if js.is_zero() {
                continue;
            }
            for p in 0..DIM {
                for q in 0..DIM {
                    let f = j.entry(p, q);
                    if f.is_zero() {
                        continue;
                    }
                    let bracket = &(&g[gix(m, s, p, q)] + &g[gix(m, p, q, s)]) + &g[gix(m, q, s, p)];
                    if !bracket.is_zero() {
                        lhs += &(&bracket * &(f * js));
                    }
                }
            }
        }
        let mut rhs = Scalar::zero();
        for p in 0..DIM {
            rhs += &g[gix(m, p, n, p)];
        }
        &lhs.scale(&rational(1, 2)) - &rhs
    })
}

pub fn identity_15_check(r: &CurvatureTensor4, j: &AlmostComplexStructure) -> bool {
    identity_15_residual(r, j).is_zero()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Identity16 {
    Holds,
    Fails,
    /// `R` is not a `(1,1)`-form, so the reduced identity does not apply.
    NotApplicable,
}

/// `R_{mjab} R_{klab} F^{kl} = 0` for all `m, j`, once `R` is known to be `(1,1)`.
pub fn identity_16_check(r: &CurvatureTensor4, j: &AlmostComplexStructure) -> Identity16 {
    if !r.is_type_11(j) {
        return Identity16::NotApplicable;
    }
    let g = r.gram();
    for m in 0..DIM {
        for k in 0..DIM {
            let mut acc = Scalar::zero();
            for p in 0..DIM {
                for q in 0..DIM {
                    let f = j.entry(p, q);
                    if !f.is_zero() {
                        acc += &(f * &g[gix(m, k, p, q)]);
                    }
                }
            }
            if !acc.is_zero() {
                return Identity16::Fails;
            }
        }
    }
    Identity16::Holds
}

/// Data of one candidate solution: metric and flux from `hermitian`, the gauge
/// field, the curvature term `R` and `alpha'`.
#[derive(Clone, Debug)]
pub struct MotionConfiguration {
    pub name: String,
    pub hermitian: HermitianStructure,
    pub flux: KForm,
    pub instanton: InstantonBundle,
    pub curvature_term: Curvature,
    pub alpha_prime: Scalar,
}

impl MotionConfiguration {
    pub fn new(
        name: impl Into<String>,
        hermitian: HermitianStructure,
        instanton: InstantonBundle,
        curvature_term: Curvature,
        alpha_prime: Scalar,
    ) -> Result<MotionConfiguration> {
        let flux = hermitian.torsion_3form()?;
        Ok(MotionConfiguration {
            name: name.into(),
            hermitian,
            flux,
            instanton,
            curvature_term,
            alpha_prime,
        })
    }

    /// Solves the anomaly condition for `alpha'` and builds the configuration.
    /// Fails unless `alpha'` is a single rational number.
    pub fn from_anomaly(
        name: impl Into<String>,
        hermitian: HermitianStructure,
        instanton: InstantonBundle,
        curvature_term: Curvature,
    ) -> Result<MotionConfiguration> {
        let name = name.into();
        let eqs = &hermitian.geometry.structure;
        let dt = hermitian.d(&hermitian.torsion_3form()?);
        let p_r = crate::anomaly::pontrjagin_raw(&curvature_term, eqs)?;
        let p_a: PontrjaginForm = instanton.pontrjagin(eqs)?;
        let report = solve_alpha_prime(&dt, &p_r, &p_a);
        let alpha = match report.alpha_prime.as_ref().and_then(AlphaPrime::as_scalar) {
            Some(a) if a.as_rational().is_some() => a,
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "{name}: anomaly condition gives alpha' = {}",
                    report
                        .alpha_prime
                        .map(|a| a.to_string())
                        .unwrap_or_else(|| "-".into())
                )))
            }
        };
        MotionConfiguration::new(name, hermitian, instanton, curvature_term, alpha)
    }

    /// `h3` with `A = nabla^+_{tp}` and `R = R(nabla^+_t)`.
    pub fn h3_tangent(t: Scalar, tp: Scalar) -> Result<MotionConfiguration> {
        let geometry = PresetGeometry::preset(PresetName::H3, &Params::new().with("t", t.clone()))?;
        let h = HermitianStructure::new(&geometry);
        let r = connection(&h, ConnectionKind::Plus)?.curvature(&geometry.structure);
        let a = InstantonBundle::tangent_h3(&t, &tp)?;
        MotionConfiguration::from_anomaly(format!("h3-tangent(t={t},tp={tp})"), h, a, r)
    }

    /// A preset with the abelian instanton and `R` the curvature of `kind`.
    pub fn abelian(name: PresetName, params: &Params, kind: ConnectionKind) -> Result<MotionConfiguration> {
        let geometry = PresetGeometry::preset(name, params)?;
        let h = HermitianStructure::new(&geometry);
        let r = connection(&h, kind)?.curvature(&geometry.structure);
        let a = InstantonBundle::abelian(&geometry)?;
        MotionConfiguration::from_anomaly(format!("{name}-abelian-{kind}"), h, a, r)
    }

    pub fn flat_torus(alpha_prime: Scalar) -> Result<MotionConfiguration> {
        let geometry = PresetGeometry::preset(PresetName::Torus, &Params::new())?;
        let h = HermitianStructure::new(&geometry);
        MotionConfiguration::new(
            "torus-flat",
            h,
            InstantonBundle::trivial(DIM),
            Curvature::new(vec![vec![KForm::zero(2); DIM]; DIM]),
            alpha_prime,
        )
    }
}

/// Checks, at constant dilaton:
/// (i) `Ric^g_ij - 1/4 H_imn H_jmn - alpha'/4 [F_imab F_jmab - R_imab R_jmab] = 0`,
/// (ii) `nabla^g_i H_ijk = 0`,
/// (iii) `nabla^+_i F_ij = 0`.
/// Quadratic terms sum over bundle pairs `a < b`, matching the normalization
/// of the Pontrjagin forms. Residual components list the offending indices.
pub fn equations_of_motion_check(cfg: &MotionConfiguration) -> Result<[VerificationReport; 3]> {
    let h = &cfg.hermitian;
    let eqs = &h.geometry.structure;
    let lc = levi_civita(eqs);
    let ricci = lc.curvature(eqs).ricci();
    let flux = Tensor::from_form(&cfg.flux);
    let hh = torsion_square(&flux);
    let ff = CurvatureTensor4::new(&cfg.instanton.curvature).square();
    let rr = CurvatureTensor4::new(&cfg.curvature_term).square();
    let quarter = rational(1, 4);
    let a4 = cfg.alpha_prime.scale(&quarter);
    let einstein = Tensor::from_fn(2, |ix| {
        let quad = ff.get(ix) - rr.get(ix);
        &(ricci.get(ix[0], ix[1]) - &hh.get(ix).scale(&quarter)) - &(&a4 * &quad)
    });
    let mut first = VerificationReport::components(format!("{}: eom (i)", cfg.name), einstein.nonzero());
    if cfg.instanton.kind == InstantonKind::Abelian {
        first = first.with_note("gauge term from the so(2) curvature matrix of the abelian field strength e12 - e34");
    }

    let h_div = divergence(&lc.covariant_derivative(&flux));
    let second = VerificationReport::components(format!("{}: eom (ii)", cfg.name), h_div.nonzero());

    let plus = connection(h, ConnectionKind::Plus)?;
    let third = VerificationReport::components(
        format!("{}: eom (iii)", cfg.name),
        yang_mills_residual(&cfg.instanton, &plus),
    );
    Ok([first, second, third])
}

/// `sum_i (nabla^+_{E_i} F)(E_i, E_j)` with the gauge indices carried by the
/// instanton's own connection; components indexed `[j, a, b]` for `F^a_b`.
fn yang_mills_residual(
    a: &InstantonBundle,
    plus: &crate::connections::Connection,
) -> Vec<(Vec<usize>, Scalar)> {
    let cur = &a.curvature;
    let n = cur.rank();
    let comp = |x: usize, y: usize, p: usize, q: usize| cur.form(p, q).eval_basis(&[x, y]);
    let mut out = Vec::new();
    for j in 0..DIM {
        for p in 0..n {
            for q in 0..n {
                let mut acc = Scalar::zero();
                for i in 0..DIM {
                    for s in 0..DIM {
                        let w = plus.coefficient(s, i, i);
                        if !w.is_zero() {
                            acc -= &(&w * &comp(s, j, p, q));
                        }
                        let w = plus.coefficient(s, j, i);
                        if !w.is_zero() {
                            acc -= &(&w * &comp(i, s, p, q));
                        }
                    }
                    if let Some(conn) = &a.connection {
                        for c in 0..n {
                            let l = conn.coefficient(p, c, i);
                            if !l.is_zero() {
                                acc += &(&l * &comp(i, j, c, q));
                            }
                            let r = conn.coefficient(c, q, i);
                            if !r.is_zero() {
                                acc -= &(&comp(i, j, p, c) * &r);
                            }
                        }
                    }
                }
                if !acc.is_zero() {
                    out.push((vec![j, p, q], acc));
                }
            }
        }
    }
    out
}
