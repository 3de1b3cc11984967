//! Almost complex structures, the Kaehler form, integrability, the balanced
//! condition and the torsion 3-form of the Bismut connection.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::exterior::{KForm, Vector, DIM};
use crate::frames::{ComplexStructureEquations, Holo, PresetGeometry, StructureEquations};
use crate::scalar::Scalar;

/// `J E_i = sum_j J^j_i E_j`, stored as `m[j][i] = J^j_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlmostComplexStructure {
    m: [[Scalar; DIM]; DIM],
}

impl AlmostComplexStructure {
    /// `J E1 = -E2, J E2 = E1`, and likewise on `(E3, E4)` and `(E5, E6)`.
    pub fn standard() -> AlmostComplexStructure {
        let mut m: [[Scalar; DIM]; DIM] = Default::default();
        for p in 0..3 {
            let (a, b) = (2 * p, 2 * p + 1);
            m[b][a] = Scalar::from_int(-1);
            m[a][b] = Scalar::one();
        }
        AlmostComplexStructure { m }
    }

    /// Builds `J` from its images of the frame, `images[i] = J E_i`.
    /// Fails unless `J^2 = -1`.
    pub fn from_images(images: [Vector; DIM]) -> Result<AlmostComplexStructure> {
        let mut m: [[Scalar; DIM]; DIM] = Default::default();
        for (i, v) in images.iter().enumerate() {
            for (j, row) in m.iter_mut().enumerate() {
                row[i] = v.0[j].clone();
            }
        }
        let j = AlmostComplexStructure { m };
        if !j.squares_to_minus_one() {
            return Err(Error::InvalidParameters("J^2 != -1".into()));
        }
        Ok(j)
    }

    /// `J^j_i`, zero-based.
    pub fn entry(&self, j: usize, i: usize) -> &Scalar {
        &self.m[j][i]
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector(std::array::from_fn(|j| {
            let mut acc = Scalar::zero();
            for i in 0..DIM {
                if !v.0[i].is_zero() && !self.m[j][i].is_zero() {
                    acc += &(&self.m[j][i] * &v.0[i]);
                }
            }
            acc
        }))
    }

    pub fn apply_basis(&self, i: usize) -> Vector {
        Vector(std::array::from_fn(|j| self.m[j][i].clone()))
    }

    pub fn squares_to_minus_one(&self) -> bool {
        (0..DIM).all(|i| {
            let v = self.apply(&self.apply_basis(i));
            v == Vector::basis(i).scale(&Scalar::from_int(-1))
        })
    }

    /// `g(JX, JY) = g(X, Y)` on frame pairs for the orthonormal metric.
    pub fn is_orthogonal(&self) -> bool {
        (0..DIM).all(|i| {
            (0..DIM).all(|k| {
                let a = self.apply_basis(i);
                let b = self.apply_basis(k);
                let mut g = Scalar::zero();
                for j in 0..DIM {
                    g += &(&a.0[j] * &b.0[j]);
                }
                g == if i == k { Scalar::one() } else { Scalar::zero() }
            })
        })
    }

    /// `F(X, Y) = g(X, JY)`, so `F_{ij} = J^i_j`.
    pub fn kaehler_form(&self) -> KForm {
        KForm::from_components(2, |ix| self.m[ix[0]][ix[1]].clone())
    }

    /// `alpha(J., ..., J.)`.
    pub fn pullback(&self, alpha: &KForm) -> KForm {
        let images: [KForm; DIM] = std::array::from_fn(|k| {
            KForm::from_components(1, |ix| self.m[k][ix[0]].clone())
        });
        alpha.substitute_coframe(&images)
    }

    /// True iff `alpha(JX, JY, ...) = alpha(X, Y, ...)`.
    pub fn preserves(&self, alpha: &KForm) -> bool {
        &self.pullback(alpha) == alpha
    }
}

/// The Nijenhuis tensor `N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]`.
pub struct Nijenhuis<'a> {
    j: &'a AlmostComplexStructure,
    eqs: &'a StructureEquations,
}

impl Nijenhuis<'_> {
    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        let (jx, jy) = (self.j.apply(x), self.j.apply(y));
        let b = |u: &Vector, v: &Vector| self.eqs.bracket(u, v);
        let mut n = &b(&jx, &jy) - &b(x, y);
        n = &n - &self.j.apply(&b(&jx, y));
        &n - &self.j.apply(&b(x, &jy))
    }

    pub fn eval_basis(&self, i: usize, k: usize) -> Vector {
        self.eval(&Vector::basis(i), &Vector::basis(k))
    }

    /// First frame pair `(i, k)`, zero-based, where `N` does not vanish.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        (0..DIM)
            .flat_map(|i| (i + 1..DIM).map(move |k| (i, k)))
            .find(|&(i, k)| !self.eval_basis(i, k).is_zero())
    }

    pub fn vanishes(&self) -> bool {
        self.first_nonzero().is_none()
    }
}

pub fn nijenhuis<'a>(j: &'a AlmostComplexStructure, eqs: &'a StructureEquations) -> Nijenhuis<'a> {
    Nijenhuis { j, eqs }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianStructure {
    pub geometry: PresetGeometry,
    pub j: AlmostComplexStructure,
    pub f: KForm,
}

impl HermitianStructure {
    pub fn new(geometry: &PresetGeometry) -> HermitianStructure {
        HermitianStructure {
            j: geometry.j.clone(),
            f: geometry.j.kaehler_form(),
            geometry: geometry.clone(),
        }
    }

    pub fn d(&self, form: &KForm) -> KForm {
        self.geometry.structure.d(form)
    }

    pub fn is_integrable(&self) -> bool {
        nijenhuis(&self.j, &self.geometry.structure).vanishes()
    }

    /// `None` when balanced, otherwise the reason it is not.
    pub fn balance_failure(&self) -> Option<String> {
        if let Some((i, k)) = nijenhuis(&self.j, &self.geometry.structure).first_nonzero() {
            return Some(format!("J is not integrable: N(E{}, E{}) != 0", i + 1, k + 1));
        }
        let d_star_f = self.d(&self.f.hodge_star());
        let d_ff = self.d(&self.f.wedge(&self.f));
        if d_star_f.is_zero() != d_ff.is_zero() {
            return Some(format!("d*F = {d_star_f} disagrees with d(F^F) = {d_ff}"));
        }
        if d_star_f.is_zero() {
            None
        } else {
            Some(format!("d*F = {d_star_f}"))
        }
    }

    pub fn balanced_check(&self) -> bool {
        self.balance_failure().is_none()
    }

    /// `T = -dF(J., J., J.)`, cross-checked against `*dF`.
    pub fn torsion_3form(&self) -> Result<KForm> {
        let df = self.d(&self.f);
        let t = -self.j.pullback(&df);
        let starred = df.hodge_star();
        if t != starred {
            return Err(Error::Convention(format!(
                "-dF(J,J,J) = {t} but *dF = {starred}"
            )));
        }
        Ok(t)
    }

    /// `theta(X) = (delta F)(JX)` with `delta = -*d*`.
    pub fn lee_form(&self) -> KForm {
        let delta_f = -self.d(&self.f.hodge_star()).hodge_star();
        let delta_f = if delta_f.is_zero() { KForm::zero(1) } else { delta_f };
        self.j.pullback(&delta_f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `d omega^3 = rho omega^12 + omega^11bar + B omega^12bar + D omega^22bar`.
    Nilpotent,
    /// `d omega^2 = E omega^13 + omega^13bar`,
    /// `d omega^3 = C omega^11bar + i a omega^12bar - i a Ebar omega^21bar`.
    NonNilpotent,
}

/// Complex structure coefficients together with the Hermitian form
/// `2F = i(r^2 w11bar + s^2 w22bar + t^2 w33bar) + u w12bar - ubar w21bar
/// + v w23bar - vbar w32bar + z w13bar - zbar w31bar`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalancedParameterSet {
    pub family: Family,
    pub rho: u8,
    pub b: Complex,
    pub d: Complex,
    pub e: Complex,
    pub c: Complex,
    pub a: Scalar,
    pub u: Complex,
    pub v: Complex,
    pub z: Complex,
    pub r: Scalar,
    pub s: Scalar,
    pub t: Scalar,
}

impl BalancedParameterSet {
    /// Nilpotent family with `r = s = 1`, `u = v = z = 0` and fiber scale `t`.
    pub fn nilpotent(rho: u8, b: Complex, d: Complex, t: Scalar) -> BalancedParameterSet {
        BalancedParameterSet {
            family: Family::Nilpotent,
            rho,
            b,
            d,
            e: Complex::one(),
            c: Complex::zero(),
            a: Scalar::one(),
            u: Complex::zero(),
            v: Complex::zero(),
            z: Complex::zero(),
            r: Scalar::one(),
            s: Scalar::one(),
            t,
        }
    }

    /// Non-nilpotent family with `r = s = t = 1` and `u = v = z = 0`.
    pub fn nonnilpotent(e: Complex, c: Complex, a: Scalar) -> BalancedParameterSet {
        BalancedParameterSet {
            family: Family::NonNilpotent,
            rho: 0,
            b: Complex::zero(),
            d: Complex::zero(),
            e,
            c,
            a,
            u: Complex::zero(),
            v: Complex::zero(),
            z: Complex::zero(),
            r: Scalar::one(),
            s: Scalar::one(),
            t: Scalar::one(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, x) in [("r", &self.r), ("s", &self.s), ("t", &self.t)] {
            if x.is_zero() {
                return Err(Error::DegenerateParameter(format!("{name} = 0")));
            }
        }
        match self.family {
            Family::Nilpotent => {
                if self.rho > 1 {
                    return Err(Error::InvalidParameters("rho must be 0 or 1".into()));
                }
            }
            Family::NonNilpotent => {
                if self.e.norm_sqr() != Scalar::one() {
                    return Err(Error::InvalidParameters("|E| != 1".into()));
                }
                if self.c.conj() != &self.c * &self.e {
                    return Err(Error::InvalidParameters("Cbar != CE".into()));
                }
                if self.a.is_zero() {
                    return Err(Error::DegenerateParameter("a = 0".into()));
                }
            }
        }
        Ok(())
    }

    pub fn complex_equations(&self) -> ComplexStructureEquations {
        use Holo::{Wbar, W};
        match self.family {
            Family::Nilpotent => ComplexStructureEquations::default()
                .term(2, Complex::from_ints(self.rho as i64, 0), W(0), W(1))
                .term(2, Complex::one(), W(0), Wbar(0))
                .term(2, self.b.clone(), W(0), Wbar(1))
                .term(2, self.d.clone(), W(1), Wbar(1)),
            Family::NonNilpotent => {
                let ia = Complex::new(Scalar::zero(), self.a.clone());
                ComplexStructureEquations::default()
                    .term(1, self.e.clone(), W(0), W(2))
                    .term(1, Complex::one(), W(0), Wbar(2))
                    .term(2, self.c.clone(), W(0), Wbar(0))
                    .term(2, ia.clone(), W(0), Wbar(1))
                    .term(2, -&(&ia * &self.e.conj()), W(1), Wbar(0))
            }
        }
    }

    /// The balanced conditions on the complex parameters, as exact identities.
    pub fn proposition31_check(&self) -> bool {
        let i = Complex::i();
        let sq = |x: &Scalar| Complex::real(x * x);
        match self.family {
            Family::NonNilpotent => {
                // z = -iuv/s^2, multiplied through by s^2
                let first = &(&self.z * &sq(&self.s)) + &(&i * &(&self.u * &self.v));
                let a = Complex::real(self.a.clone());
                let second = &(&(&self.c * &sq(&self.s)) + &(&a * &(&self.e.conj() * &self.u)))
                    + &(&a * &self.u.conj());
                first.is_zero() && second.is_zero()
            }
            Family::Nilpotent => {
                let t2 = sq(&self.t);
                let lhs = &(&(&sq(&self.s) * &t2) - &Complex::real(self.v.norm_sqr()))
                    + &(&self.d
                        * &(&(&sq(&self.r) * &t2) - &Complex::real(self.z.norm_sqr())));
                let rhs = &self.b
                    * &(&(&i * &(&t2 * &self.u.conj())) - &(&self.v * &self.z.conj()));
                (&lhs - &rhs).is_zero()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{realify, PresetName};
    use crate::notation::parse_form;

    fn form(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    fn h3_positive_d() -> HermitianStructure {
        let p = BalancedParameterSet::nilpotent(0, Complex::zero(), Complex::one(), Scalar::var("t"));
        HermitianStructure::new(&realify(&p).unwrap())
    }

    #[test]
    fn standard_j_is_orthogonal_complex() {
        let j = AlmostComplexStructure::standard();
        assert!(j.squares_to_minus_one());
        assert!(j.is_orthogonal());
        assert_eq!(j.kaehler_form(), form("e12 + e34 + e56"));
        assert_eq!(j.apply_basis(0), Vector::basis(1).scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn presets_are_balanced_with_agreeing_torsion() {
        for name in PresetName::ALL {
            let h = HermitianStructure::new(&PresetGeometry::symbolic(name));
            assert!(h.is_integrable(), "{name}");
            assert!(h.balanced_check(), "{name}");
            assert!(h.lee_form().is_zero(), "{name}");
            assert!(h.torsion_3form().is_ok(), "{name}");
            let fff = h.f.wedge(&h.f).wedge(&h.f);
            assert_eq!(fff, KForm::volume().scale(&Scalar::from_int(6)));
        }
    }

    #[test]
    fn torsion_examples() {
        let t = |n| {
            HermitianStructure::new(&PresetGeometry::symbolic(n))
                .torsion_3form()
                .unwrap()
        };
        assert_eq!(t(PresetName::Iwasawa), form("-t*e135 - t*e146 - t*e236 + t*e245"));
        assert_eq!(t(PresetName::H3), form("-2*t*e126 + 2*t*e346"));
        assert!(t(PresetName::Torus).is_zero());
        assert_eq!(t(PresetName::H19Minus), form("2*e136 + 2*e146 - 2*e236 + 2*e246"));
    }

    #[test]
    fn positive_d_is_not_balanced() {
        let h = h3_positive_d();
        assert!(h.is_integrable());
        assert!(!h.balanced_check());
        assert!(!h.lee_form().is_zero());
    }

    #[test]
    fn swapped_j_is_not_integrable_on_h3() {
        let g = PresetGeometry::symbolic(PresetName::H3);
        let b = Vector::basis;
        let neg = |i| Vector::basis(i).scale(&Scalar::from_int(-1));
        let j = AlmostComplexStructure::from_images([b(2), b(3), neg(0), neg(1), b(5), neg(4)])
            .unwrap();
        let n = nijenhuis(&j, &g.structure);
        assert!(!n.eval_basis(0, 1).is_zero());
        assert!(nijenhuis(&g.j, &g.structure).vanishes());
    }

    #[test]
    fn proposition31_examples() {
        let t = Scalar::var("t");
        let b = Complex::new(Scalar::var("b"), Scalar::var("c"));
        let p = BalancedParameterSet::nilpotent(1, b.clone(), Complex::from_ints(-1, 0), t.clone());
        assert!(p.proposition31_check());
        let p = BalancedParameterSet::nilpotent(0, b, Complex::one(), t);
        assert!(!p.proposition31_check());
        let p = BalancedParameterSet::nonnilpotent(Complex::one(), Complex::zero(), Scalar::one());
        assert!(p.proposition31_check());
        let mut p = BalancedParameterSet::nonnilpotent(Complex::one(), Complex::zero(), Scalar::one());
        p.u = Complex::one();
        assert!(!p.proposition31_check());
    }

    #[test]
    fn nonnilpotent_validation() {
        let p = BalancedParameterSet::nonnilpotent(Complex::from_ints(2, 0), Complex::zero(), Scalar::one());
        assert!(matches!(p.validate(), Err(Error::InvalidParameters(_))));
        let p = BalancedParameterSet::nonnilpotent(Complex::from_ints(-1, 0), Complex::from_ints(0, 1), Scalar::one());
        assert!(p.validate().is_ok());
    }
}
