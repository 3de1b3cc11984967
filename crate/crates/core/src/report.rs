//! Named identity checks with exact residuals and their text serialization.

use std::cmp::Ordering;
use std::fmt;

use crate::exterior::KForm;
use crate::scalar::Scalar;

/// What is left over when an identity is evaluated; zero means it holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Residual {
    Form(KForm),
    /// Nonzero tensor components, zero-based index tuples.
    Components(Vec<(Vec<usize>, Scalar)>),
}

impl Residual {
    pub fn zero() -> Residual {
        Residual::Components(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Form(f) => f.is_zero(),
            Residual::Components(c) => c.is_empty(),
        }
    }

    pub fn num_terms(&self) -> usize {
        match self {
            Residual::Form(f) => f.num_terms(),
            Residual::Components(c) => c.len(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Form(form) => write!(f, "{form}"),
            Residual::Components(c) if c.is_empty() => f.write_str("0"),
            Residual::Components(c) => {
                for (n, (ix, v)) in c.iter().enumerate() {
                    if n > 0 {
                        f.write_str(", ")?;
                    }
                    let ix: String = ix.iter().map(|i| char::from(b'1' + *i as u8)).collect();
                    write!(f, "[{ix}] = {v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Outcome of solving `dT = (alpha'/4)(p1raw(nabla) - p1raw(A))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlphaPrime {
    /// `alpha' = num / den`.
    Value { num: Scalar, den: Scalar },
    /// Both sides vanish.
    Unconstrained,
    /// The two sides are not proportional.
    NoSolution,
}

impl AlphaPrime {
    pub fn value(num: Scalar, den: Scalar) -> AlphaPrime {
        match den.inverse() {
            Some(inv) => AlphaPrime::Value {
                num: &num * &inv,
                den: Scalar::one(),
            },
            None => AlphaPrime::Value { num, den },
        }
    }

    /// Sign of `alpha'` when it is the same for every real parameter value
    /// where it is defined.
    pub fn sign(&self) -> Option<Ordering> {
        match self {
            AlphaPrime::Value { num, den } => {
                let (a, b) = (num.definite_sign()?, den.definite_sign()?);
                Some(match (a, b) {
                    (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
                    _ if a == b => Ordering::Greater,
                    _ => Ordering::Less,
                })
            }
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self {
            AlphaPrime::Value { num, den } if den.is_one() => Some(num.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for AlphaPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaPrime::Value { num, den } if den.is_one() => write!(f, "{num}"),
            AlphaPrime::Value { num, den } => write!(f, "({num})/({den})"),
            AlphaPrime::Unconstrained => f.write_str("unconstrained"),
            AlphaPrime::NoSolution => f.write_str("none"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub residual: Residual,
    pub alpha_prime: Option<AlphaPrime>,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, residual: Residual) -> VerificationReport {
        VerificationReport {
            name: name.into(),
            residual,
            alpha_prime: None,
            note: None,
        }
    }

    pub fn form(name: impl Into<String>, residual: KForm) -> VerificationReport {
        VerificationReport::new(name, Residual::Form(residual))
    }

    pub fn components(
        name: impl Into<String>,
        components: Vec<(Vec<usize>, Scalar)>,
    ) -> VerificationReport {
        VerificationReport::new(name, Residual::Components(components))
    }

    /// A yes/no check with no algebraic residual.
    pub fn boolean(name: impl Into<String>, ok: bool, why: &str) -> VerificationReport {
        let mut r = VerificationReport::new(
            name,
            if ok {
                Residual::zero()
            } else {
                Residual::Components(vec![(Vec::new(), Scalar::one())])
            },
        );
        if !ok {
            r.note = Some(why.to_owned());
        }
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> VerificationReport {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }

    /// `pass`/`fail` for plain identities; for anomaly reports one of
    /// `valid`, `invalid`, `unconstrained`, `no-solution` or `pass` when the
    /// sign of `alpha'` depends on the parameters.
    pub fn status(&self) -> &'static str {
        match &self.alpha_prime {
            Some(AlphaPrime::NoSolution) => "no-solution",
            _ if !self.passed() => "fail",
            None => "pass",
            Some(AlphaPrime::Unconstrained) => "unconstrained",
            Some(a) => match a.sign() {
                Some(Ordering::Greater) => "valid",
                Some(_) => "invalid",
                None => "pass",
            },
        }
    }

    /// `name=..<TAB>status=..<TAB>residual_terms=..<TAB>alpha_prime=..`.
    pub fn record(&self) -> String {
        let alpha = match &self.alpha_prime {
            Some(a @ AlphaPrime::Value { .. }) => a.to_string().replace(' ', ""),
            _ => "-".to_owned(),
        };
        format!(
            "name={}\tstatus={}\tresidual_terms={}\talpha_prime={}",
            self.name,
            self.status(),
            self.residual.num_terms(),
            alpha
        )
    }
}
