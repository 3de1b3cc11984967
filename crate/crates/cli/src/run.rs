//! Executes the checks requested by a scenario.

use nilflux::anomaly::{
    instanton_check, pontrjagin_raw, solve_alpha_prime, verify_theorem, InstantonBundle,
    InstantonKind, TheoremId,
};
use nilflux::connections::{connection, structural_identities, ConnectionKind, Curvature};
use nilflux::eom::{equations_of_motion_check, identity_15_residual, CurvatureTensor4, MotionConfiguration};
use nilflux::frames::{parse_structure, Params, PresetGeometry, PresetName};
use nilflux::golden;
use nilflux::hermitian::{nijenhuis, AlmostComplexStructure, HermitianStructure};
use nilflux::notation::parse_form;
use nilflux::{AlphaPrime, Error, KForm, Result, Scalar, VerificationReport};

use crate::scenario::{Check, Geometry, Scenario};

pub fn geometry(s: &Scenario) -> Result<PresetGeometry> {
    match &s.geometry {
        Geometry::Preset(name) => PresetGeometry::preset(*name, &s.params),
        Geometry::Structure(src) => {
            let eqs = parse_structure(src)?.substitute(&s.params.bindings())?;
            Ok(PresetGeometry::new("custom", eqs, AlmostComplexStructure::standard()))
        }
    }
}

fn preset_of(s: &Scenario) -> Option<PresetName> {
    match s.geometry {
        Geometry::Preset(p) => Some(p),
        Geometry::Structure(_) => None,
    }
}

/// Nonzero coefficients of a form, indexed by `prefix` followed by the
/// zero-based form indices.
pub fn form_components(prefix: &[usize], f: &KForm) -> Vec<(Vec<usize>, Scalar)> {
    f.terms()
        .map(|(idx, c)| {
            let mut ix = prefix.to_vec();
            ix.extend(idx.indices());
            (ix, c.clone())
        })
        .collect()
}

fn bind(f: &KForm, params: &Params) -> Result<KForm> {
    let b = params.bindings();
    f.map_coefficients(|c| c.substitute_all(&b))
}

/// Compares every computed `Omega^i_j` with the published table.
pub fn curvature_table_report(
    h: &HermitianStructure,
    table: &golden::CurvatureTable,
    params: &Params,
) -> Result<VerificationReport> {
    let cur = connection(h, table.connection)?.curvature(&h.geometry.structure);
    let mut out = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let expected = bind(&table.expected(i, j)?, params)?;
            out.extend(form_components(&[i, j], &(cur.form(i, j) - &expected)));
        }
    }
    Ok(VerificationReport::components(
        format!("curvature-{}", table.connection),
        out,
    ))
}

pub fn p1_report(
    h: &HermitianStructure,
    value: &golden::PontrjaginValue,
    params: &Params,
) -> Result<VerificationReport> {
    let eqs = &h.geometry.structure;
    let raw = pontrjagin_raw(&connection(h, value.connection)?.curvature(eqs), eqs)?.raw;
    let expected = bind(&parse_form(value.raw)?, params)?;
    let diff = if expected.is_zero() { raw } else { &raw - &expected };
    Ok(VerificationReport::form(format!("p1-{}", value.connection), diff))
}

pub fn torsion_report(h: &HermitianStructure, data: &golden::TorsionData, params: &Params) -> Result<VerificationReport> {
    let df = h.d(&h.f);
    let t = h.torsion_3form()?;
    let dt = h.d(&t);
    let mut out = Vec::new();
    for (n, (got, src)) in [(&df, data.df), (&t, data.t), (&dt, data.dt)].into_iter().enumerate() {
        out.extend(form_components(&[n], &(got - &bind(&parse_form(src)?, params)?)));
    }
    Ok(VerificationReport::components("torsion-data", out))
}

pub fn balanced_report(h: &HermitianStructure) -> VerificationReport {
    let why = h.balance_failure().unwrap_or_default();
    VerificationReport::boolean("balanced", why.is_empty(), &why)
}

/// The instanton for `kind`, or a default: the `A_{lambda,mu}` family on
/// `h19minus`, the abelian field where it is closed, and the flat bundle otherwise.
pub fn instanton_bundle(
    kind: Option<InstantonKind>,
    preset: Option<PresetName>,
    geometry: &PresetGeometry,
    params: &Params,
) -> Result<InstantonBundle> {
    let kind = match kind {
        Some(k) => k,
        None if preset == Some(PresetName::H19Minus) => InstantonKind::FamilyH19,
        None => match InstantonBundle::abelian(geometry) {
            Ok(a) => return Ok(a),
            Err(_) => InstantonKind::Trivial,
        },
    };
    match kind {
        InstantonKind::Trivial => Ok(InstantonBundle::trivial(6)),
        InstantonKind::Abelian => InstantonBundle::abelian(geometry),
        InstantonKind::Tangent if preset == Some(PresetName::H3) => {
            InstantonBundle::tangent_h3(&params.get("t"), &params.get("tp"))
        }
        InstantonKind::FamilyH19 if preset == Some(PresetName::H19Minus) => {
            InstantonBundle::family_h19(&params.get("lambda"), &params.get("mu"))
        }
        other => Err(Error::Unsupported(format!(
            "instanton `{}` is defined only on {}",
            other.as_str(),
            if other == InstantonKind::Tangent { "h3" } else { "h19minus" }
        ))),
    }
}

fn unbound_in(alpha: &AlphaPrime) -> Vec<String> {
    match alpha {
        AlphaPrime::Value { num, den } => {
            let mut vars: Vec<String> = num
                .variables()
                .into_iter()
                .chain(den.variables())
                .map(|v| v.name().to_owned())
                .collect();
            vars.sort();
            vars.dedup();
            vars
        }
        _ => Vec::new(),
    }
}

/// Solves the anomaly condition and insists that the sign of `alpha'` is decided.
pub fn anomaly_report(
    h: &HermitianStructure,
    r: &Curvature,
    a: &InstantonBundle,
    label: &str,
) -> Result<VerificationReport> {
    let eqs = &h.geometry.structure;
    let dt = h.d(&h.torsion_3form()?);
    let mut rep = solve_alpha_prime(&dt, &pontrjagin_raw(r, eqs)?, &a.pontrjagin(eqs)?);
    rep.name = format!("anomaly-{label}");
    if let Some(alpha) = &rep.alpha_prime {
        if alpha.sign().is_none() {
            let vars = unbound_in(alpha);
            if !vars.is_empty() {
                return Err(Error::Unbound(vars.join("`, `")));
            }
        }
    }
    Ok(rep)
}

/// The three field equations and the gravitino identity for curvature term `r`.
pub fn eom_reports(
    h: &HermitianStructure,
    r: Curvature,
    a: InstantonBundle,
    label: &str,
) -> Result<Vec<VerificationReport>> {
    let anomaly = anomaly_report(h, &r, &a, label)?;
    let alpha = match &anomaly.alpha_prime {
        Some(AlphaPrime::Unconstrained) => Scalar::one(),
        Some(a) => match a.as_scalar().filter(|s| s.as_rational().is_some()) {
            Some(s) => s,
            None => {
                let why = format!("anomaly condition has no rational alpha' ({a})");
                return Ok(vec![
                    anomaly.clone(),
                    VerificationReport::boolean(format!("eom-{label}"), false, &why),
                ]);
            }
        },
        None => unreachable!("solve_alpha_prime always sets alpha'"),
    };
    let cfg = MotionConfiguration::new(label, h.clone(), a, r, alpha)?;
    let mut out = vec![anomaly];
    out.extend(equations_of_motion_check(&cfg)?);
    let residual = identity_15_residual(&CurvatureTensor4::new(&cfg.curvature_term), &h.j);
    out.push(VerificationReport::components(
        format!("{label}: gravitino identity"),
        residual.nonzero(),
    ));
    Ok(out)
}

fn theorem_ids(preset: PresetName, remarks: bool) -> impl Iterator<Item = TheoremId> {
    TheoremId::ALL.into_iter().filter(move |id| {
        let is_remark = matches!(id.as_str().as_bytes()[0], b'R' | b'E');
        id.preset() == preset && is_remark == remarks
    })
}

/// Runs every requested check in dependency order.
pub fn run_scenario(s: &Scenario) -> Result<Vec<VerificationReport>> {
    let geometry = geometry(s)?;
    let h = HermitianStructure::new(&geometry);
    let eqs = &geometry.structure;
    let preset = preset_of(s);
    let mut out = Vec::new();
    for check in &s.checks {
        match check {
            Check::Integrable => out.push(VerificationReport::boolean(
                "integrable",
                h.is_integrable(),
                &nijenhuis(&h.j, eqs)
                    .first_nonzero()
                    .map(|(i, k)| format!("N(E{}, E{}) != 0", i + 1, k + 1))
                    .unwrap_or_default(),
            )),
            Check::Balanced => out.push(balanced_report(&h)),
            Check::Golden => {
                let p = preset.ok_or_else(|| {
                    Error::Unsupported("published data exists only for named presets".into())
                })?;
                for data in golden::TORSION_DATA.iter().filter(|d| d.preset == p) {
                    out.push(torsion_report(&h, data, &s.params)?);
                }
                for table in golden::CURVATURE_TABLES.iter().filter(|t| t.preset == p) {
                    out.push(curvature_table_report(&h, table, &s.params)?);
                }
                for v in golden::PONTRJAGIN_VALUES.iter().filter(|v| v.preset == p) {
                    out.push(p1_report(&h, v, &s.params)?);
                }
            }
            Check::Structural => out.extend(structural_identities(&h)?),
            Check::Holonomy => out.extend(
                structural_identities(&h)?
                    .into_iter()
                    .filter(|r| r.name == "holonomy-su3"),
            ),
            Check::Instanton => {
                let a = instanton_bundle(s.instanton, preset, &geometry, &s.params)?;
                out.push(VerificationReport::boolean(
                    format!("instanton-{}", a.kind.as_str()),
                    instanton_check(&a.curvature, &h.j),
                    "curvature is not a traceless (1,1)-form",
                ));
            }
            Check::Anomaly => {
                let a = instanton_bundle(s.instanton, preset, &geometry, &s.params)?;
                for kind in &s.connections {
                    let r = connection(&h, *kind)?.curvature(eqs);
                    out.push(anomaly_report(&h, &r, &a, &format!("{kind}/{}", a.kind.as_str()))?);
                }
            }
            Check::Theorems | Check::Remarks => {
                let p = preset.ok_or_else(|| {
                    Error::Unsupported("theorem checks exist only for named presets".into())
                })?;
                for id in theorem_ids(p, *check == Check::Remarks) {
                    out.push(verify_theorem(id, &s.params)?);
                }
            }
            Check::Eom => {
                for kind in &s.connections {
                    let a = instanton_bundle(s.instanton, preset, &geometry, &s.params)?;
                    let r = connection(&h, *kind)?.curvature(eqs);
                    let label = format!("{kind}/{}", a.kind.as_str());
                    let reports = eom_reports(&h, r, a, &label)?;
                    // the anomaly report was already emitted by `Check::Anomaly`
                    let skip = usize::from(s.checks.contains(&Check::Anomaly));
                    out.extend(reports.into_iter().skip(skip));
                }
            }
        }
    }
    Ok(out)
}

/// `8 pi^2 p1` of one connection on a preset.
pub fn p1_raw(preset: PresetName, kind: ConnectionKind, params: &Params) -> Result<KForm> {
    let geometry = PresetGeometry::preset(preset, params)?;
    let h = HermitianStructure::new(&geometry);
    let cur = connection(&h, kind)?.curvature(&geometry.structure);
    Ok(pontrjagin_raw(&cur, &geometry.structure)?.raw)
}

/// Whether a report status means the scenario holds.
pub fn status_ok(status: &str) -> bool {
    matches!(status, "pass" | "valid" | "unconstrained")
}
