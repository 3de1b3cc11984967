//! First Pontrjagin forms, instanton conditions, the instanton bundles used
//! in the anomaly cancellation condition, and the solver for `alpha'`.
//!
//! Pontrjagin forms are stored as `raw = 8 pi^2 p1 = sum_{i<j} Omega^i_j ^ Omega^i_j`
//! so that every coefficient stays rational.

use std::fmt;

use crate::complex::{Complex, ComplexForm};
use crate::connections::{connection, Connection, ConnectionKind, Curvature};
use crate::error::{Error, Result};
use crate::exterior::{KForm, DIM};
use crate::frames::{Params, PresetGeometry, PresetName, StructureEquations};
use crate::golden;
use crate::hermitian::{AlmostComplexStructure, HermitianStructure};
use crate::notation::parse_form;
use crate::report::{AlphaPrime, Residual, VerificationReport};
use crate::scalar::{rational, Scalar, Var};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PontrjaginForm {
    pub raw: KForm,
}

impl PontrjaginForm {
    pub fn zero() -> PontrjaginForm {
        PontrjaginForm { raw: KForm::zero(4) }
    }
}

impl fmt::Display for PontrjaginForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.raw)
    }
}

/// `sum_{i<j} Omega^i_j ^ Omega^i_j`, checked to be closed.
pub fn pontrjagin_raw(cur: &Curvature, eqs: &StructureEquations) -> Result<PontrjaginForm> {
    let mut raw = KForm::zero(4);
    let n = cur.rank();
    for i in 0..n {
        for j in i + 1..n {
            let f = cur.form(i, j);
            if !f.is_zero() {
                raw += &f.wedge(f);
            }
        }
    }
    let d = eqs.d(&raw);
    if !d.is_zero() {
        return Err(Error::Convention(format!("p1 representative is not closed: d = {d}")));
    }
    Ok(PontrjaginForm { raw })
}

/// `Omega(JX, JY) = Omega(X, Y)` for every entry, and `sum_k Omega(E_k, J E_k) = 0`.
pub fn instanton_check(cur: &Curvature, j: &AlmostComplexStructure) -> bool {
    cur.forms().all(|(_, _, f)| {
        if f.is_zero() {
            return true;
        }
        if !j.preserves(f) {
            return false;
        }
        let mut trace = Scalar::zero();
        for k in 0..DIM {
            for l in 0..DIM {
                let c = j.entry(l, k);
                if !c.is_zero() {
                    trace += &(c * &f.eval_basis(&[k, l]));
                }
            }
        }
        trace.is_zero()
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InstantonKind {
    /// The flat connection on a trivial bundle.
    Trivial,
    /// The Bismut connection of a second metric in a one-parameter family,
    /// viewed as a connection on the tangent bundle.
    Tangent,
    /// A `U(1)` connection with constant curvature `e12 - e34`.
    Abelian,
    /// The rank-six family `A_{lambda, mu}` on `h19minus`.
    FamilyH19,
}

impl InstantonKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InstantonKind::Trivial => "trivial",
            InstantonKind::Tangent => "tangent",
            InstantonKind::Abelian => "abelian",
            InstantonKind::FamilyH19 => "family",
        }
    }

    pub fn parse(s: &str) -> Option<InstantonKind> {
        match s {
            "none" | "trivial" | "zero" => Some(InstantonKind::Trivial),
            "tangent" | "plus-tp" => Some(InstantonKind::Tangent),
            "abelian" => Some(InstantonKind::Abelian),
            "family" | "family-h19" => Some(InstantonKind::FamilyH19),
            _ => None,
        }
    }
}

/// A gauge field: its curvature in an orthonormal gauge frame and, when it
/// is an invariant form, its connection matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InstantonBundle {
    pub kind: InstantonKind,
    pub connection: Option<Connection>,
    pub curvature: Curvature,
}

impl InstantonBundle {
    pub fn trivial(rank: usize) -> InstantonBundle {
        InstantonBundle {
            kind: InstantonKind::Trivial,
            connection: Some(Connection::zero(rank)),
            curvature: Curvature::new(vec![vec![KForm::zero(2); rank]; rank]),
        }
    }

    /// The abelian instanton with constant profile `f = 1/2`: in complex
    /// coordinates `F = (i/2)(w1 ^ w1bar - w2 ^ w2bar)`, i.e. `e12 - e34`,
    /// written as an `so(2)` curvature matrix. It is closed whenever
    /// `de1 = ... = de4 = 0`; the abelian structure makes `Omega = dA`.
    pub fn abelian(geometry: &PresetGeometry) -> Result<InstantonBundle> {
        let phi = abelian_field_strength();
        let d_phi = geometry.d(&phi);
        if !d_phi.is_zero() {
            return Err(Error::Unsupported(format!(
                "abelian field strength is not closed on {}: d = {d_phi}",
                geometry.name
            )));
        }
        let curvature = Curvature::new(vec![
            vec![KForm::zero(2), phi.clone()],
            vec![-&phi, KForm::zero(2)],
        ]);
        Ok(InstantonBundle {
            kind: InstantonKind::Abelian,
            connection: None,
            curvature,
        })
    }

    /// `nabla^+` of `(J_{tp}, g_{tp})` on `h3`, expressed in the coframe of
    /// `g_t` via `e'^i = e^i` (`i <= 5`), `e'^6 = (tp/t) e^6`.
    pub fn tangent_h3(t: &Scalar, tp: &Scalar) -> Result<InstantonBundle> {
        let base = PresetGeometry::preset(PresetName::H3, &Params::new().with("t", t.clone()))?;
        let other =
            PresetGeometry::preset(PresetName::H3, &Params::new().with("t", tp.clone()))?;
        let h_other = HermitianStructure::new(&other);
        let plus = connection(&h_other, ConnectionKind::Plus)?;
        let ratio = tp * &t.inverse().ok_or_else(|| Error::NotInvertible(t.to_string()))?;
        let images: [KForm; DIM] = std::array::from_fn(|k| {
            if k == 5 {
                KForm::e1(5).scale(&ratio)
            } else {
                KForm::e1(k)
            }
        });
        let forms = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| plus.form(i, j).substitute_coframe(&images))
                    .collect()
            })
            .collect();
        let conn = Connection::new(ConnectionKind::Custom, forms);
        let curvature = conn.curvature(&base.structure);
        Ok(InstantonBundle {
            kind: InstantonKind::Tangent,
            connection: Some(conn),
            curvature,
        })
    }

    /// `A_{lambda, mu}` on `h19minus`.
    pub fn family_h19(lambda: &Scalar, mu: &Scalar) -> Result<InstantonBundle> {
        let geometry = PresetGeometry::preset(PresetName::H19Minus, &Params::new())?;
        let sigma = &KForm::e1(0).scale(lambda) + &KForm::e1(5).scale(mu);
        let mut forms = vec![vec![KForm::zero(1); DIM]; DIM];
        for i in 0..DIM {
            for j in i + 1..DIM {
                let negative = golden::FAMILY_H19_NEGATIVE.contains(&(i + 1, j + 1));
                let f = if negative { -&sigma } else { sigma.clone() };
                forms[j][i] = -&f;
                forms[i][j] = f;
            }
        }
        let conn = Connection::new(ConnectionKind::Custom, forms);
        let curvature = conn.curvature(&geometry.structure);
        Ok(InstantonBundle {
            kind: InstantonKind::FamilyH19,
            connection: Some(conn),
            curvature,
        })
    }

    pub fn pontrjagin(&self, eqs: &StructureEquations) -> Result<PontrjaginForm> {
        pontrjagin_raw(&self.curvature, eqs)
    }
}

/// `e12 - e34`, from the complex expression of the constant-profile field strength.
pub fn abelian_field_strength() -> KForm {
    let w1 = ComplexForm::new(KForm::e1(0), KForm::e1(1));
    let w2 = ComplexForm::new(KForm::e1(2), KForm::e1(3));
    let half_i = Complex::new(Scalar::zero(), Scalar::from_ratio(1, 2));
    let f = w1
        .wedge(&w1.conj())
        .add(&w2.wedge(&w2.conj()).scale(&Complex::from_ints(-1, 0)))
        .scale(&half_i);
    debug_assert!(f.im.is_zero());
    f.re
}

/// Finds `alpha'` with `dT = (alpha'/4)(p_nabla - p_a)` by cross-multiplication.
pub fn solve_alpha_prime(
    dt: &KForm,
    p_nabla: &PontrjaginForm,
    p_a: &PontrjaginForm,
) -> VerificationReport {
    let diff = &p_nabla.raw - &p_a.raw;
    let mut report = match diff.terms().next() {
        None if dt.is_zero() => {
            let mut r = VerificationReport::form("anomaly", KForm::zero(4));
            r.alpha_prime = Some(AlphaPrime::Unconstrained);
            r
        }
        None => {
            let mut r = VerificationReport::form("anomaly", dt.clone());
            r.alpha_prime = Some(AlphaPrime::NoSolution);
            r
        }
        Some((idx, pivot)) => {
            let dt_pivot = dt.coefficient(*idx);
            let residual = &dt.scale(pivot) - &diff.scale(&dt_pivot);
            let mut r = VerificationReport::form("anomaly", residual.clone());
            r.alpha_prime = Some(if residual.is_zero() {
                AlphaPrime::value(dt_pivot.scale(&rational(4, 1)), pivot.clone())
            } else {
                AlphaPrime::NoSolution
            });
            r
        }
    };
    report.note = Some(format!("dT = {dt}; p1raw(nabla) - p1raw(A) = {diff}"));
    report
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T4_3,
    T5_1a,
    T5_1b,
    T5_2a,
    T5_2b,
    T6_1g,
    T6_1p,
    T7_1,
    T8_2i,
    T8_2ii,
    L8_1,
    R5_3,
    R6_2,
    R7_2,
    E4_2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::T4_3,
        TheoremId::T5_1a,
        TheoremId::T5_1b,
        TheoremId::T5_2a,
        TheoremId::T5_2b,
        TheoremId::T6_1g,
        TheoremId::T6_1p,
        TheoremId::T7_1,
        TheoremId::T8_2i,
        TheoremId::T8_2ii,
        TheoremId::L8_1,
        TheoremId::R5_3,
        TheoremId::R6_2,
        TheoremId::R7_2,
        TheoremId::E4_2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T4_3 => "T4.3",
            TheoremId::T5_1a => "T5.1a",
            TheoremId::T5_1b => "T5.1b",
            TheoremId::T5_2a => "T5.2a",
            TheoremId::T5_2b => "T5.2b",
            TheoremId::T6_1g => "T6.1g",
            TheoremId::T6_1p => "T6.1p",
            TheoremId::T7_1 => "T7.1",
            TheoremId::T8_2i => "T8.2i",
            TheoremId::T8_2ii => "T8.2ii",
            TheoremId::L8_1 => "L8.1",
            TheoremId::R5_3 => "R5.3",
            TheoremId::R6_2 => "R6.2",
            TheoremId::R7_2 => "R7.2",
            TheoremId::E4_2 => "E4.2",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|id| id.as_str() == s)
    }

    pub fn preset(&self) -> PresetName {
        match self {
            TheoremId::T4_3 | TheoremId::E4_2 => PresetName::Iwasawa,
            TheoremId::T5_1a
            | TheoremId::T5_1b
            | TheoremId::T5_2a
            | TheoremId::T5_2b
            | TheoremId::R5_3 => PresetName::H3,
            TheoremId::T6_1g | TheoremId::T6_1p | TheoremId::R6_2 => PresetName::H2H4H5,
            TheoremId::T7_1 | TheoremId::R7_2 => PresetName::H6,
            TheoremId::T8_2i | TheoremId::T8_2ii | TheoremId::L8_1 => PresetName::H19Minus,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn s(src: &str) -> Scalar {
    crate::notation::parse_scalar(src).expect("valid scalar literal")
}

/// Residual listing the nonzero coefficients of several forms, tagged by
/// their position in `forms`.
fn combined(forms: &[KForm]) -> Residual {
    let mut out = Vec::new();
    for (n, f) in forms.iter().enumerate() {
        for (idx, c) in f.terms() {
            let mut ix = vec![n];
            ix.extend(idx.indices());
            out.push((ix, c.clone()));
        }
    }
    Residual::Components(out)
}

struct Context {
    h: HermitianStructure,
    dt: KForm,
}

impl Context {
    fn new(name: PresetName, params: &Params) -> Result<Context> {
        let h = HermitianStructure::new(&PresetGeometry::preset(name, params)?);
        let dt = h.d(&h.torsion_3form()?);
        Ok(Context { h, dt })
    }

    fn p1(&self, kind: ConnectionKind) -> Result<KForm> {
        let c = connection(&self.h, kind)?.curvature(&self.h.geometry.structure);
        Ok(pontrjagin_raw(&c, &self.h.geometry.structure)?.raw)
    }

    fn abelian(&self) -> Result<KForm> {
        Ok(InstantonBundle::abelian(&self.h.geometry)?
            .pontrjagin(&self.h.geometry.structure)?
            .raw)
    }

    /// `den * dT - num * (p_nabla - p_a)` with `alpha' = 4 num / den`.
    fn anomaly(
        &self,
        id: TheoremId,
        den: Scalar,
        num: Scalar,
        p_nabla: &KForm,
        p_a: &KForm,
    ) -> VerificationReport {
        let residual = &self.dt.scale(&den) - &(p_nabla - p_a).scale(&num);
        let mut r = VerificationReport::form(id.as_str(), residual);
        r.alpha_prime = Some(AlphaPrime::value(num.scale(&rational(4, 1)), den));
        r
    }
}

/// Checks one of the published anomaly identities or Pontrjagin values as an
/// exact identity with denominators cleared. Unbound parameters stay symbolic.
pub fn verify_theorem(id: TheoremId, params: &Params) -> Result<VerificationReport> {
    let t = params.get("t");
    let t2 = &t * &t;
    let t4 = &t2 * &t2;
    let ctx = Context::new(id.preset(), params)?;
    use ConnectionKind::{Chern, LeviCivita, Minus, Plus};
    let e1234 = KForm::e(&[1, 2, 3, 4]);
    let report = match id {
        TheoremId::T4_3 => ctx.anomaly(
            id,
            Scalar::one(),
            t2.scale(&rational(-2, 1)),
            &ctx.p1(Plus)?,
            &ctx.abelian()?,
        ),
        TheoremId::T5_1a | TheoremId::T5_1b => {
            let tp = params.get("tp");
            let tp4 = tp.pow(4);
            let tangent = InstantonBundle::tangent_h3(&t, &tp)?;
            let p_tangent = tangent.pontrjagin(&ctx.h.geometry.structure)?.raw;
            if id == TheoremId::T5_1a {
                let den = &t4.scale(&rational(3, 1)) - &tp4.scale(&rational(8, 1));
                ctx.anomaly(id, den, t2.clone(), &ctx.p1(LeviCivita)?, &p_tangent)
            } else {
                let den = &t4 - &tp4;
                ctx.anomaly(id, den, t2.scale(&rational(1, 8)), &ctx.p1(Plus)?, &p_tangent)
            }
        }
        TheoremId::T5_2a => ctx.anomaly(
            id,
            &t4.scale(&rational(12, 1)) - &Scalar::one(),
            t2.scale(&rational(4, 1)),
            &ctx.p1(LeviCivita)?,
            &ctx.abelian()?,
        ),
        TheoremId::T5_2b => ctx.anomaly(
            id,
            &t4.scale(&rational(32, 1)) - &Scalar::one(),
            t2.scale(&rational(4, 1)),
            &ctx.p1(Plus)?,
            &ctx.abelian()?,
        ),
        TheoremId::T6_1g | TheoremId::T6_1p => {
            let b = params.get("b");
            let b2 = &b * &b;
            let num = &t2.scale(&rational(2, 1)) * &(&b2 + &s("3"));
            let (den, p) = if id == TheoremId::T6_1g {
                (&(&t4 * &(&(&b2 * &b2) + &(&b2.scale(&rational(4, 1)) + &s("11")))) - &s("1"), ctx.p1(LeviCivita)?)
            } else {
                (
                    &(&t4.scale(&rational(4, 1)) * &(&(&b2 * &b2) + &(&b2.scale(&rational(5, 1)) + &s("10"))))
                        - &s("1"),
                    ctx.p1(Plus)?,
                )
            };
            ctx.anomaly(id, den, num, &p, &ctx.abelian()?)
        }
        TheoremId::T7_1 => ctx.anomaly(
            id,
            &t4.scale(&rational(8, 1)) - &Scalar::one(),
            t2.scale(&rational(4, 1)),
            &ctx.p1(Plus)?,
            &ctx.abelian()?,
        ),
        TheoremId::T8_2i => {
            let mu = Var::new("mu");
            let family = InstantonBundle::family_h19(&params.get("lambda"), &Scalar::var("mu"))?;
            let p_a = family.pontrjagin(&ctx.h.geometry.structure)?.raw;
            let mut r = ctx.anomaly(id, s("2"), s("1"), &ctx.p1(Plus)?, &p_a);
            if let crate::report::Residual::Form(f) = &r.residual {
                let reduced = f.map_coefficients(|c| Ok(c.reduce_square(mu, &rational(4, 15))))?;
                r.residual = crate::report::Residual::Form(reduced);
            }
            r.with_note("mu^2 = 4/15")
        }
        TheoremId::T8_2ii => {
            let family = InstantonBundle::family_h19(&params.get("lambda"), &Scalar::zero())?;
            let p_a = family.pontrjagin(&ctx.h.geometry.structure)?.raw;
            let mut r = ctx.anomaly(id, s("2"), s("1"), &ctx.p1(Chern)?, &p_a);
            if !p_a.is_zero() {
                r.residual = combined(&[p_a]);
            }
            r
        }
        TheoremId::L8_1 => {
            let family = InstantonBundle::family_h19(&params.get("lambda"), &params.get("mu"))?;
            let p_a = family.pontrjagin(&ctx.h.geometry.structure)?.raw;
            let expected = parse_form(golden::FAMILY_H19_P1)?
                .map_coefficients(|c| c.substitute_all(&params.bindings()))?;
            if !instanton_check(&family.curvature, &ctx.h.j) {
                VerificationReport::boolean(id.as_str(), false, "A is not an SU(3)-instanton")
            } else {
                VerificationReport::form(id.as_str(), &p_a - &expected)
            }
        }
        TheoremId::R5_3 => VerificationReport::new(id.as_str(), combined(&[ctx.p1(Minus)?, ctx.p1(Chern)?])),
        TheoremId::R6_2 => {
            let b = params.get("b");
            let expected = e1234.scale(&(&t4.scale(&rational(8, 1)) * &(&(&b * &b) + &s("3"))));
            VerificationReport::new(id.as_str(), combined(&[&ctx.p1(Minus)? - &expected, ctx.p1(Chern)?]))
        }
        TheoremId::R7_2 => {
            let expected = e1234.scale(&t4.scale(&rational(16, 1)));
            VerificationReport::new(
                id.as_str(),
                combined(&[ctx.p1(LeviCivita)?, &ctx.p1(Minus)? - &expected, ctx.p1(Chern)?]),
            )
        }
        TheoremId::E4_2 => {
            let g = &ctx.p1(LeviCivita)? - &e1234.scale(&t4.scale(&rational(2, 1)));
            let m = &ctx.p1(Minus)? - &e1234.scale(&t4.scale(&rational(8, 1)));
            VerificationReport::new(id.as_str(), combined(&[g, ctx.p1(Plus)?, m, ctx.p1(Chern)?]))
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn form(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    fn h(name: PresetName) -> HermitianStructure {
        HermitianStructure::new(&PresetGeometry::symbolic(name))
    }

    fn raw(name: PresetName, kind: ConnectionKind) -> PontrjaginForm {
        let h = h(name);
        let c = connection(&h, kind).unwrap().curvature(&h.geometry.structure);
        pontrjagin_raw(&c, &h.geometry.structure).unwrap()
    }

    #[test]
    fn pontrjagin_examples() {
        use ConnectionKind::*;
        assert_eq!(raw(PresetName::Iwasawa, LeviCivita).raw, form("2*t^4*e1234"));
        assert!(raw(PresetName::Iwasawa, Plus).raw.is_zero());
        assert_eq!(raw(PresetName::H3, Plus).raw, form("-64*t^4*e1234"));
        assert_eq!(
            raw(PresetName::H2H4H5, LeviCivita).raw,
            form("-2*t^4*(b^4+4*b^2+11)*e1234")
        );
    }

    #[test]
    fn abelian_field_strength_is_the_constant_profile() {
        assert_eq!(abelian_field_strength(), form("e12 - e34"));
        let phi = abelian_field_strength();
        assert_eq!(phi.wedge(&phi), form(golden::ABELIAN_P1));
        for name in [PresetName::Iwasawa, PresetName::H3, PresetName::H2H4H5, PresetName::H6] {
            let g = PresetGeometry::symbolic(name);
            let a = InstantonBundle::abelian(&g).unwrap();
            assert!(instanton_check(&a.curvature, &g.j));
            assert_eq!(a.pontrjagin(&g.structure).unwrap().raw, form("-2*e1234"));
        }
        assert!(InstantonBundle::abelian(&PresetGeometry::symbolic(PresetName::H19Minus)).is_err());
    }

    #[test]
    fn abelian_potential_on_h3() {
        // A = -e6/(2t) has dA = e12 - e34 on h3
        let g = PresetGeometry::symbolic(PresetName::H3);
        let a = KForm::e1(5).scale(&Scalar::var_pow("t", -1).scale(&rational(-1, 2)));
        assert_eq!(g.d(&a), abelian_field_strength());
    }

    #[test]
    fn instanton_examples() {
        let fam = InstantonBundle::family_h19(&Scalar::var("lambda"), &Scalar::var("mu")).unwrap();
        let g19 = PresetGeometry::symbolic(PresetName::H19Minus);
        assert!(instanton_check(&fam.curvature, &g19.j));
        assert_eq!(*fam.curvature.form(1, 2), form("-2*mu*(e13 + e24)"));
        assert_eq!(*fam.curvature.form(0, 1), form("2*mu*(e13 + e24)"));
        assert_eq!(fam.pontrjagin(&g19.structure).unwrap().raw, form("-120*mu^2*e1234"));
        let flat = InstantonBundle::family_h19(&Scalar::var("lambda"), &Scalar::zero()).unwrap();
        assert!(flat.curvature.is_zero());

        let tan = InstantonBundle::tangent_h3(&Scalar::var("t"), &Scalar::var("tp")).unwrap();
        let g3 = PresetGeometry::symbolic(PresetName::H3);
        assert!(instanton_check(&tan.curvature, &g3.j));
        assert_eq!(*tan.curvature.form(0, 1), form("-4*tp^2*(e12 - e34)"));
        assert_eq!(
            tan.pontrjagin(&g3.structure).unwrap().raw,
            form("-64*tp^4*e1234")
        );

        let h3 = h(PresetName::H3);
        let lc = connection(&h3, ConnectionKind::LeviCivita)
            .unwrap()
            .curvature(&h3.geometry.structure);
        assert!(!instanton_check(&lc, &h3.j));
        for name in PresetName::ALL {
            let hh = h(name);
            let plus = connection(&hh, ConnectionKind::Plus)
                .unwrap()
                .curvature(&hh.geometry.structure);
            assert!(plus.j_trace(&hh.j).is_zero(), "{name}");
        }
    }

    #[test]
    fn alpha_prime_examples() {
        let iw = h(PresetName::Iwasawa);
        let dt = iw.d(&iw.torsion_3form().unwrap());
        let a = InstantonBundle::abelian(&iw.geometry).unwrap().pontrjagin(&iw.geometry.structure).unwrap();
        let r = solve_alpha_prime(&dt, &raw(PresetName::Iwasawa, ConnectionKind::Plus), &a);
        assert_eq!(r.alpha_prime.as_ref().unwrap().as_scalar(), Some(Scalar::var_pow("t", 2).scale(&rational(-8, 1))));
        assert_eq!(r.alpha_prime.as_ref().unwrap().sign(), Some(Ordering::Less));
        assert_eq!(r.status(), "invalid");

        let p = Params::new().with("t", Scalar::one());
        let h3 = HermitianStructure::new(&PresetGeometry::preset(PresetName::H3, &p).unwrap());
        let dt = h3.d(&h3.torsion_3form().unwrap());
        let plus = connection(&h3, ConnectionKind::Plus).unwrap().curvature(&h3.geometry.structure);
        let pn = pontrjagin_raw(&plus, &h3.geometry.structure).unwrap();
        let r = solve_alpha_prime(&dt, &pn, &a);
        // oracle: -8 / ((-64 + 2) / 4)
        let oracle = Scalar::from_int(-8).scale(&rational(4, -62));
        assert_eq!(r.alpha_prime.as_ref().unwrap().as_scalar(), Some(oracle.clone()));
        assert_eq!(oracle, Scalar::from_ratio(16, 31));
        assert_eq!(r.status(), "valid");

        let r = solve_alpha_prime(&KForm::zero(4), &PontrjaginForm::zero(), &PontrjaginForm::zero());
        assert_eq!(r.status(), "unconstrained");
        let r = solve_alpha_prime(
            &form("e1234"),
            &PontrjaginForm { raw: form("e1234 + e1256") },
            &PontrjaginForm::zero(),
        );
        assert_eq!(r.status(), "no-solution");
    }

    #[test]
    fn all_theorems_hold_symbolically() {
        for id in TheoremId::ALL {
            let r = verify_theorem(id, &Params::new()).unwrap();
            assert!(r.passed(), "{id}: {}", r.residual);
        }
        assert_eq!(verify_theorem(TheoremId::T4_3, &Params::new()).unwrap().status(), "invalid");
    }

    #[test]
    fn theorem_alpha_at_sample_points() {
        let p = Params::new().with("t", Scalar::one());
        let r = verify_theorem(TheoremId::T5_2b, &p).unwrap();
        assert_eq!(r.alpha_prime.unwrap().as_scalar(), Some(Scalar::from_ratio(16, 31)));
        let p = Params::new().with("t", Scalar::one()).with("tp", Scalar::from_ratio(1, 2));
        let r = verify_theorem(TheoremId::T5_1b, &p).unwrap();
        assert_eq!(r.alpha_prime.unwrap().as_scalar(), Some(Scalar::from_ratio(8, 15)));
    }
}
