//! Structure equations of six-dimensional Lie algebras, the exterior
//! derivative they induce on invariant forms, realification of complex
//! structure equations, and the preset geometries.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Complex, ComplexForm};
use crate::error::{Error, Result};
use crate::exterior::{KForm, MultiIndex, Vector, DIM};
use crate::hermitian::{AlmostComplexStructure, BalancedParameterSet, Family};
use crate::notation;
use crate::scalar::{Scalar, Var};

/// Coefficients `a^k_{ij}` of `de^k = sum_{i<j} a^k_{ij} e^{ij}`, stored as the
/// six 2-forms `de^k`. Construction enforces `d^2 = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureEquations {
    de: [KForm; DIM],
}

impl StructureEquations {
    pub fn new(de: [KForm; DIM]) -> Result<StructureEquations> {
        if let Some(bad) = de.iter().position(|f| f.degree() != 2 && !f.is_zero()) {
            return Err(Error::Parse {
                pos: bad,
                msg: format!("de{} must be a 2-form", bad + 1),
            });
        }
        let de = de.map(|f| if f.is_zero() { KForm::zero(2) } else { f });
        let eqs = StructureEquations { de };
        match eqs.jacobi_failure() {
            Some(k) => Err(Error::Jacobi(k + 1)),
            None => Ok(eqs),
        }
    }

    /// Builds equations without the integrability check, for diagnostics.
    pub fn new_unchecked(de: [KForm; DIM]) -> StructureEquations {
        StructureEquations {
            de: de.map(|f| if f.is_zero() { KForm::zero(2) } else { f }),
        }
    }

    pub fn abelian() -> StructureEquations {
        StructureEquations::new_unchecked(std::array::from_fn(|_| KForm::zero(2)))
    }

    /// `de^{k+1}` (zero-based `k`).
    pub fn differential(&self, k: usize) -> &KForm {
        &self.de[k]
    }

    pub fn differentials(&self) -> &[KForm; DIM] {
        &self.de
    }

    /// `a^k_{ij}` with zero-based indices, antisymmetric in `i, j`.
    pub fn coefficient(&self, k: usize, i: usize, j: usize) -> Scalar {
        self.de[k].eval_basis(&[i, j])
    }

    /// `[E_i, E_j] = -sum_k a^k_{ij} E_k`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        Vector(std::array::from_fn(|k| -self.coefficient(k, i, j)))
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for i in 0..DIM {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y.0[j].is_zero() || i == j {
                    continue;
                }
                let c = &x.0[i] * &y.0[j];
                out = &out + &self.bracket_basis(i, j).scale(&c);
            }
        }
        out
    }

    /// Exterior derivative of an invariant form (graded Leibniz rule, constant
    /// coefficients).
    pub fn d(&self, form: &KForm) -> KForm {
        let mut out = KForm::zero(form.degree() + 1);
        for (idx, c) in form.terms() {
            let ix: Vec<usize> = idx.indices().collect();
            for (p, &i) in ix.iter().enumerate() {
                if self.de[i].is_zero() {
                    continue;
                }
                let before = MultiIndex::from_bits(ix[..p].iter().fold(0, |b, &j| b | (1 << j)));
                let after = MultiIndex::from_bits(ix[p + 1..].iter().fold(0, |b, &j| b | (1 << j)));
                let term = KForm::monomial(before, c.clone())
                    .wedge(&self.de[i])
                    .wedge(&KForm::monomial(after, Scalar::one()));
                if p % 2 == 0 {
                    out += &term;
                } else {
                    out -= &term;
                }
            }
        }
        out
    }

    fn jacobi_failure(&self) -> Option<usize> {
        (0..DIM).find(|&k| !self.d(&self.de[k]).is_zero())
    }

    /// True iff `d(de^k) = 0` for every `k`.
    pub fn jacobi_check(&self) -> bool {
        self.jacobi_failure().is_none()
    }

    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<StructureEquations> {
        let mut de: [KForm; DIM] = std::array::from_fn(|_| KForm::zero(2));
        for (k, f) in self.de.iter().enumerate() {
            de[k] = f.map_coefficients(|c| c.substitute_all(bindings))?;
        }
        StructureEquations::new(de)
    }

    pub fn render(&self) -> String {
        notation::render_differentials(&self.de)
    }
}

impl fmt::Display for StructureEquations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses structure notation such as `(0,0,0,12,23,14-35)` and checks `d^2 = 0`.
pub fn parse_structure(notation: &str) -> Result<StructureEquations> {
    StructureEquations::new(notation::parse_differentials(notation)?)
}

/// A (1,0)-form `omega^k` or its conjugate, zero-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Holo {
    W(usize),
    Wbar(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexTerm {
    pub coef: Complex,
    pub left: Holo,
    pub right: Holo,
}

impl ComplexTerm {
    pub fn new(coef: Complex, left: Holo, right: Holo) -> ComplexTerm {
        ComplexTerm { coef, left, right }
    }
}

/// `d omega^k` for `k = 1, 2, 3` as sums of `c omega^a ^ omega^b` with either
/// factor possibly conjugated.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ComplexStructureEquations {
    pub d_omega: [Vec<ComplexTerm>; 3],
}

impl ComplexStructureEquations {
    pub fn term(mut self, k: usize, coef: Complex, left: Holo, right: Holo) -> Self {
        if !coef.is_zero() {
            self.d_omega[k].push(ComplexTerm::new(coef, left, right));
        }
        self
    }
}

/// Real structure equations for the coframe `e^{2k-1} + i e^{2k} = scale_k omega^k`.
pub fn realify_equations(
    eqs: &ComplexStructureEquations,
    scales: &[Scalar; 3],
) -> Result<StructureEquations> {
    let mut omega = Vec::with_capacity(3);
    for (k, s) in scales.iter().enumerate() {
        let inv = s.inverse().ok_or_else(|| {
            if s.is_zero() {
                Error::DegenerateParameter(format!("scale of omega{} is zero", k + 1))
            } else {
                Error::NotInvertible(s.to_string())
            }
        })?;
        omega.push(ComplexForm::new(
            KForm::e1(2 * k).scale(&inv),
            KForm::e1(2 * k + 1).scale(&inv),
        ));
    }
    let factor = |h: Holo| match h {
        Holo::W(a) => omega[a].clone(),
        Holo::Wbar(a) => omega[a].conj(),
    };
    let mut de: [KForm; DIM] = std::array::from_fn(|_| KForm::zero(2));
    for k in 0..3 {
        let mut acc = ComplexForm::zero(2);
        for term in &eqs.d_omega[k] {
            acc = acc.add(&factor(term.left).wedge(&factor(term.right)).scale(&term.coef));
        }
        de[2 * k] = acc.re.scale(&scales[k]);
        de[2 * k + 1] = acc.im.scale(&scales[k]);
    }
    StructureEquations::new(de)
}

/// Parameter bindings; unbound names stay symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, Scalar>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: Scalar) -> Params {
        self.0.insert(name.to_owned(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: Scalar) {
        self.0.insert(name.to_owned(), value);
    }

    /// The bound value, or the symbol itself.
    pub fn get(&self, name: &str) -> Scalar {
        self.0
            .get(name)
            .cloned()
            .unwrap_or_else(|| Scalar::var(name))
    }

    pub fn is_bound(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Scalar)> {
        self.0.iter()
    }

    pub fn bindings(&self) -> Vec<(Var, Scalar)> {
        self.0
            .iter()
            .map(|(k, v)| (Var::new(k), v.clone()))
            .collect()
    }
}

/// The named geometries: structure equations with the standard complex
/// structure `J e1 = -e2, J e3 = -e4, J e5 = -e6` and `F = e12 + e34 + e56`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum PresetName {
    Iwasawa,
    H3,
    H2H4H5,
    H6,
    H19Minus,
    Torus,
}

impl PresetName {
    pub const ALL: [PresetName; 6] = [
        PresetName::Iwasawa,
        PresetName::H3,
        PresetName::H2H4H5,
        PresetName::H6,
        PresetName::H19Minus,
        PresetName::Torus,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PresetName::Iwasawa => "iwasawa",
            PresetName::H3 => "h3",
            PresetName::H2H4H5 => "h2h4h5",
            PresetName::H6 => "h6",
            PresetName::H19Minus => "h19minus",
            PresetName::Torus => "torus",
        }
    }

    pub fn parse(name: &str) -> Result<PresetName> {
        match name {
            "iwasawa" => Ok(PresetName::Iwasawa),
            "h3" => Ok(PresetName::H3),
            "h2h4h5" => Ok(PresetName::H2H4H5),
            "h6" => Ok(PresetName::H6),
            "h19minus" | "h19" => Ok(PresetName::H19Minus),
            "torus" | "h1" => Ok(PresetName::Torus),
            other => Err(Error::UnknownPreset(other.to_owned())),
        }
    }

    /// Parameters the preset depends on.
    pub fn parameters(&self) -> &'static [&'static str] {
        match self {
            PresetName::Iwasawa | PresetName::H3 | PresetName::H6 => &["t"],
            PresetName::H2H4H5 => &["t", "b"],
            PresetName::H19Minus | PresetName::Torus => &[],
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresetGeometry {
    pub name: String,
    pub structure: StructureEquations,
    pub j: AlmostComplexStructure,
    pub f: KForm,
}

impl PresetGeometry {
    pub fn new(name: &str, structure: StructureEquations, j: AlmostComplexStructure) -> Self {
        let f = j.kaehler_form();
        PresetGeometry {
            name: name.to_owned(),
            structure,
            j,
            f,
        }
    }

    pub fn preset(name: PresetName, params: &Params) -> Result<PresetGeometry> {
        let t = params.get("t");
        if t.is_zero() && name.parameters().contains(&"t") {
            return Err(Error::DegenerateParameter("t = 0".into()));
        }
        let one = Scalar::one();
        let std_j = AlmostComplexStructure::standard();
        let geom = match name {
            PresetName::Iwasawa => {
                let eqs = ComplexStructureEquations::default().term(
                    2,
                    Complex::one(),
                    Holo::W(0),
                    Holo::W(1),
                );
                let s = realify_equations(&eqs, &[one.clone(), one, t])?;
                PresetGeometry::new("iwasawa", s, std_j)
            }
            PresetName::H3 => {
                let mut g = realify(&BalancedParameterSet::nilpotent(
                    0,
                    Complex::zero(),
                    Complex::from_ints(-1, 0),
                    t,
                ))?;
                g.name = "h3".into();
                g
            }
            PresetName::H2H4H5 => {
                let mut g = realify(&BalancedParameterSet::nilpotent(
                    1,
                    Complex::real(params.get("b")),
                    Complex::from_ints(-1, 0),
                    t,
                ))?;
                g.name = "h2h4h5".into();
                g
            }
            PresetName::H6 => {
                let eqs = ComplexStructureEquations::default()
                    .term(2, Complex::one(), Holo::W(0), Holo::W(1))
                    .term(2, Complex::from_ints(-1, 0), Holo::W(1), Holo::Wbar(0));
                let s = realify_equations(&eqs, &[one.clone(), one, t])?;
                PresetGeometry::new("h6", s, std_j)
            }
            PresetName::H19Minus => {
                let mut g = realify(&BalancedParameterSet::nonnilpotent(
                    Complex::one(),
                    Complex::zero(),
                    Scalar::one(),
                ))?;
                g.name = "h19minus".into();
                g
            }
            PresetName::Torus => {
                PresetGeometry::new("torus", StructureEquations::abelian(), std_j)
            }
        };
        Ok(geom)
    }

    /// Preset with every parameter symbolic.
    pub fn symbolic(name: PresetName) -> PresetGeometry {
        PresetGeometry::preset(name, &Params::new()).expect("symbolic presets are valid")
    }

    pub fn d(&self, form: &KForm) -> KForm {
        self.structure.d(form)
    }
}

/// Real geometry of a parameter set with diagonal Hermitian form: coframe
/// `e1 + i e2 = r omega^1`, `e3 + i e4 = s omega^2`, `e5 + i e6 = t omega^3`,
/// standard `J` and `F = e12 + e34 + e56`.
pub fn realify(p: &BalancedParameterSet) -> Result<PresetGeometry> {
    p.validate()?;
    if !(p.u.is_zero() && p.v.is_zero() && p.z.is_zero()) {
        return Err(Error::Unsupported(
            "realification needs a diagonal Hermitian form (u = v = z = 0)".into(),
        ));
    }
    let eqs = p.complex_equations();
    let structure = realify_equations(&eqs, &[p.r.clone(), p.s.clone(), p.t.clone()])?;
    let name = match p.family {
        Family::Nilpotent => "nilpotent",
        Family::NonNilpotent => "nonnilpotent",
    };
    Ok(PresetGeometry::new(
        name,
        structure,
        AlmostComplexStructure::standard(),
    ))
}
