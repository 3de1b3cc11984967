//! Published curvature tables, torsion data and Pontrjagin representatives
//! of the preset geometries, as form expressions.
//!
//! Tables list every nonzero `Omega^i_j` with `i < j` (one-based); entries
//! absent from a table are zero.

use crate::connections::ConnectionKind;
use crate::error::Result;
use crate::exterior::KForm;
use crate::frames::PresetName;
use crate::notation::parse_form;

pub struct CurvatureTable {
    pub preset: PresetName,
    pub connection: ConnectionKind,
    pub entries: &'static [(usize, usize, &'static str)],
}

impl CurvatureTable {
    /// Expected `Omega^i_j` (zero-based indices, either order).
    pub fn expected(&self, i: usize, j: usize) -> Result<KForm> {
        let (a, b, sign) = if i <= j { (i, j, false) } else { (j, i, true) };
        let found = self
            .entries
            .iter()
            .find(|(p, q, _)| *p == a + 1 && *q == b + 1)
            .map(|(_, _, s)| parse_form(s))
            .transpose()?
            .unwrap_or_else(|| KForm::zero(2));
        Ok(if sign { -found } else { found })
    }
}

use ConnectionKind::{Chern, LeviCivita, Minus, Plus};
use PresetName::{H19Minus, H2H4H5, Iwasawa, H3, H6};

pub const CURVATURE_TABLES: &[CurvatureTable] = &[
    CurvatureTable {
        preset: Iwasawa,
        connection: LeviCivita,
        entries: &[
            (1, 2, "t^2/2*(e34 - e56)"),
            (1, 3, "-t^2/4*(3*e13 - e24)"),
            (1, 4, "-t^2/4*(3*e14 + e23)"),
            (1, 5, "t^2/4*(e15 - e26)"),
            (2, 6, "-t^2/4*(e15 - e26)"),
            (1, 6, "t^2/4*(e16 + e25)"),
            (2, 5, "t^2/4*(e16 + e25)"),
            (2, 3, "-t^2/4*(e14 + 3*e23)"),
            (2, 4, "t^2/4*(e13 - 3*e24)"),
            (3, 4, "t^2/2*(e12 - e56)"),
            (3, 5, "t^2/4*(e35 - e46)"),
            (4, 6, "-t^2/4*(e35 - e46)"),
            (3, 6, "t^2/4*(e36 + e45)"),
            (4, 5, "t^2/4*(e36 + e45)"),
            (5, 6, "-t^2/2*(e12 + e34)"),
        ],
    },
    CurvatureTable {
        preset: Iwasawa,
        connection: Plus,
        entries: &[
            (1, 2, "2*t^2*e34"),
            (1, 3, "-t^2*(e13 + e24)"),
            (2, 4, "-t^2*(e13 + e24)"),
            (1, 4, "-t^2*(e14 - e23)"),
            (2, 3, "t^2*(e14 - e23)"),
            (3, 4, "2*t^2*e12"),
            (5, 6, "-2*t^2*(e12 + e34)"),
        ],
    },
    CurvatureTable {
        preset: Iwasawa,
        connection: Minus,
        entries: &[
            (1, 2, "-2*t^2*e56"),
            (3, 4, "-2*t^2*e56"),
            (1, 3, "-t^2*(e13 - e24)"),
            (2, 4, "t^2*(e13 - e24)"),
            (1, 4, "-t^2*(e14 + e23)"),
            (2, 3, "-t^2*(e14 + e23)"),
        ],
    },
    CurvatureTable {
        preset: Iwasawa,
        connection: Chern,
        entries: &[],
    },
    CurvatureTable {
        preset: H3,
        connection: LeviCivita,
        entries: &[
            (1, 2, "-t^2*(3*e12 - 2*e34)"),
            (1, 3, "t^2*e24"),
            (1, 4, "-t^2*e23"),
            (1, 6, "t^2*e16"),
            (2, 3, "-t^2*e14"),
            (2, 4, "t^2*e13"),
            (2, 6, "t^2*e26"),
            (3, 4, "t^2*(2*e12 - 3*e34)"),
            (3, 6, "t^2*e36"),
            (4, 6, "t^2*e46"),
        ],
    },
    CurvatureTable {
        preset: H3,
        connection: Plus,
        entries: &[
            (1, 2, "-4*t^2*(e12 - e34)"),
            (3, 4, "4*t^2*(e12 - e34)"),
        ],
    },
    CurvatureTable {
        preset: H2H4H5,
        connection: Plus,
        entries: &[
            (1, 2, "-4*t^2*e12 - 2*t^2*(b-1)*e14 + 2*t^2*(b+1)*e23 + 6*t^2*e34 - 2*t^2*b^2*e56"),
            (1, 3, "-t^2*(b^2+b+1)*e13 - t^2*(b^2-b+1)*e24"),
            (2, 4, "-t^2*(b^2+b+1)*e13 - t^2*(b^2-b+1)*e24"),
            (1, 4, "-2*t^2*b*e12 - t^2*(b^2-b+1)*e14 + t^2*(b^2+b+1)*e23 + 2*t^2*b*e34 + 4*t^2*b*e56"),
            (2, 3, "-(-2*t^2*b*e12 - t^2*(b^2-b+1)*e14 + t^2*(b^2+b+1)*e23 + 2*t^2*b*e34 + 4*t^2*b*e56)"),
            (1, 5, "t^2*b*e15 + t^2*b*e26 - 2*t^2*e46"),
            (2, 6, "t^2*b*e15 + t^2*b*e26 - 2*t^2*e46"),
            (1, 6, "-t^2*b*e16 + t^2*b*e25 + 2*t^2*e36"),
            (2, 5, "-(-t^2*b*e16 + t^2*b*e25 + 2*t^2*e36)"),
            (3, 4, "6*t^2*e12 + 2*t^2*(b-1)*e14 - 2*t^2*(b+1)*e23 - 4*t^2*e34 + 2*t^2*b^2*e56"),
            (3, 5, "-2*t^2*e26 + t^2*b*e35 - t^2*b*e46"),
            (4, 6, "-2*t^2*e26 + t^2*b*e35 - t^2*b*e46"),
            (3, 6, "2*t^2*e16 + t^2*b*e36 + t^2*b*e45"),
            (4, 5, "-(2*t^2*e16 + t^2*b*e36 + t^2*b*e45)"),
            (5, 6, "-2*t^2*e12 - 2*t^2*e34"),
        ],
    },
    CurvatureTable {
        preset: H2H4H5,
        connection: LeviCivita,
        entries: &[
            (1, 2, "-3*t^2*e12 - 3/2*t^2*(b-1)*e14 + 3/2*t^2*(b+1)*e23 - t^2/2*(b^2-5)*e34 - t^2/2*(b^2+1)*e56"),
            (1, 3, "-3/4*t^2*(b+1)^2*e13 - t^2/4*(b^2-5)*e24"),
            (1, 4, "-3/2*t^2*(b-1)*e12 - 3/4*t^2*(b-1)^2*e14 + t^2/4*(b^2-5)*e23 + 3/2*t^2*(b-1)*e34 + t^2*b*e56"),
            (1, 5, "t^2/4*(b+1)^2*e15 - t^2/4*(b-1)^2*e26 + t^2/2*(b-1)*e46"),
            (1, 6, "t^2/4*(b^2-2*b+5)*e16 + t^2/4*(b+1)^2*e25 + t^2*e36 - t^2/2*(b+1)*e45"),
            (2, 3, "3/2*t^2*(b+1)*e12 + t^2/4*(b^2-5)*e14 - 3/4*t^2*(b+1)^2*e23 - 3/2*t^2*(b+1)*e34 - t^2*b*e56"),
            (2, 4, "-t^2/4*(b^2-5)*e13 - 3/4*t^2*(b-1)^2*e24"),
            (2, 5, "t^2/4*(b+1)^2*e16 + t^2/4*(b-1)^2*e25 - t^2/2*(b+1)*e36"),
            (2, 6, "-t^2/4*(b-1)^2*e15 + t^2/4*(b^2+2*b+5)*e26 + t^2/2*(b-1)*e35 - t^2*e46"),
            (3, 4, "-t^2/2*(b^2-5)*e12 + 3/2*t^2*(b-1)*e14 - 3/2*t^2*(b+1)*e23 - 3*t^2*e34 + t^2/2*(b^2-1)*e56"),
            (3, 5, "t^2/2*(b-1)*e26 + t^2/4*(b+1)^2*e35 + t^2/4*(b^2-1)*e46"),
            (3, 6, "t^2*e16 - t^2/2*(b+1)*e25 + t^2/4*(b^2+2*b+5)*e36 - t^2/4*(b^2-1)*e45"),
            (4, 5, "-t^2/2*(b+1)*e16 - t^2/4*(b^2-1)*e36 + t^2/4*(b-1)^2*e45"),
            (4, 6, "t^2/2*(b-1)*e15 - t^2*e26 + t^2/4*(b^2-1)*e35 + t^2/4*(b^2-2*b+5)*e46"),
            (5, 6, "-t^2/2*(b^2+1)*e12 + t^2*b*e14 - t^2*b*e23 + t^2/2*(b^2-1)*e34"),
        ],
    },
    CurvatureTable {
        preset: H6,
        connection: Plus,
        entries: &[
            (1, 2, "2*t^2*(e34 + e56)"),
            (1, 3, "-t^2*(3*e13 + e24)"),
            (2, 4, "-t^2*(3*e13 + e24)"),
            (1, 4, "-t^2*(3*e14 - e23)"),
            (2, 3, "t^2*(3*e14 - e23)"),
            (1, 5, "t^2*(e15 - e26)"),
            (2, 6, "t^2*(e15 - e26)"),
            (1, 6, "t^2*(e16 + e25)"),
            (2, 5, "-t^2*(e16 + e25)"),
            (3, 4, "2*t^2*(e12 - e56)"),
            (3, 5, "t^2*(e35 + e46)"),
            (4, 6, "t^2*(e35 + e46)"),
            (3, 6, "-t^2*(e36 - e45)"),
            (4, 5, "t^2*(e36 - e45)"),
            (5, 6, "-2*t^2*(e12 + e34)"),
        ],
    },
    CurvatureTable {
        preset: H19Minus,
        connection: Chern,
        entries: &[
            (1, 2, "-2*e34 - 2*e56"),
            (1, 3, "-e13 - e24"),
            (2, 4, "-e13 - e24"),
            (1, 4, "2*e13 + e14 - e23 + 2*e24"),
            (2, 3, "-(2*e13 + e14 - e23 + 2*e24)"),
            (1, 5, "e16 - e25"),
            (2, 6, "e16 - e25"),
            (1, 6, "e15 - e26"),
            (2, 5, "e15 - e26"),
            (3, 4, "-2*e12 + 2*e56"),
            (3, 5, "-e36 + e45"),
            (4, 6, "-e36 + e45"),
            (3, 6, "e35 + e46"),
            (4, 5, "-(e35 + e46)"),
            (5, 6, "2*e12 + 2*e34"),
        ],
    },
    CurvatureTable {
        preset: H19Minus,
        connection: Plus,
        entries: &[
            (1, 2, "-2*e34 + 2*e56"),
            (1, 3, "-3*e13 - 3*e24"),
            (2, 4, "-3*e13 - 3*e24"),
            (1, 4, "-2*e13 - e14 + e23 - 2*e24"),
            (2, 3, "-(-2*e13 - e14 + e23 - 2*e24)"),
            (1, 5, "-3*e15 - 2*e16 - e26"),
            (2, 6, "-3*e15 - 2*e16 - e26"),
            (1, 6, "-e16 + 3*e25 + 2*e26"),
            (2, 5, "-(-e16 + 3*e25 + 2*e26)"),
            (3, 4, "-2*e12 - 2*e56"),
            (3, 5, "e35 + 2*e36 - e46"),
            (4, 6, "e35 + 2*e36 - e46"),
            (3, 6, "-e36 - e45 - 2*e46"),
            (4, 5, "-(-e36 - e45 - 2*e46)"),
            (5, 6, "2*e12 + 2*e34"),
        ],
    },
];

/// Printed table entries that no J-compatible connection can produce, with
/// the value that is consistent with the rest of the published data.
pub struct Misprint {
    pub preset: PresetName,
    pub connection: ConnectionKind,
    pub i: usize,
    pub j: usize,
    pub consistent: &'static str,
    pub reason: &'static str,
}

pub const MISPRINTS: &[Misprint] = &[
    Misprint {
        preset: H19Minus,
        connection: Chern,
        i: 1,
        j: 6,
        consistent: "-e15 - e26",
        reason: "printed (1,6) = (2,5) breaks Omega^1_6 = -Omega^2_5 required by nabla J = 0, \
                 and changes the e1256 part of the printed p1",
    },
    Misprint {
        preset: H19Minus,
        connection: Chern,
        i: 2,
        j: 5,
        consistent: "e15 + e26",
        reason: "see (1,6)",
    },
];

impl Misprint {
    pub fn find(preset: PresetName, connection: ConnectionKind, i: usize, j: usize) -> Option<&'static Misprint> {
        MISPRINTS
            .iter()
            .find(|m| m.preset == preset && m.connection == connection && m.i == i && m.j == j)
    }
}

/// A published first Pontrjagin form, stored as `8 pi^2 p1`.
pub struct PontrjaginValue {
    pub preset: PresetName,
    pub connection: ConnectionKind,
    pub raw: &'static str,
}

pub const PONTRJAGIN_VALUES: &[PontrjaginValue] = &[
    PontrjaginValue { preset: Iwasawa, connection: LeviCivita, raw: "2*t^4*e1234" },
    PontrjaginValue { preset: Iwasawa, connection: Plus, raw: "0" },
    PontrjaginValue { preset: Iwasawa, connection: Minus, raw: "8*t^4*e1234" },
    PontrjaginValue { preset: Iwasawa, connection: Chern, raw: "0" },
    PontrjaginValue { preset: H3, connection: LeviCivita, raw: "-24*t^4*e1234" },
    PontrjaginValue { preset: H3, connection: Plus, raw: "-64*t^4*e1234" },
    PontrjaginValue { preset: H3, connection: Minus, raw: "0" },
    PontrjaginValue { preset: H3, connection: Chern, raw: "0" },
    PontrjaginValue { preset: H2H4H5, connection: LeviCivita, raw: "-2*t^4*(b^4 + 4*b^2 + 11)*e1234" },
    PontrjaginValue { preset: H2H4H5, connection: Plus, raw: "-8*t^4*(b^4 + 5*b^2 + 10)*e1234" },
    PontrjaginValue { preset: H2H4H5, connection: Minus, raw: "8*t^4*(b^2 + 3)*e1234" },
    PontrjaginValue { preset: H2H4H5, connection: Chern, raw: "0" },
    PontrjaginValue { preset: H6, connection: Plus, raw: "-16*t^4*e1234" },
    PontrjaginValue { preset: H6, connection: LeviCivita, raw: "0" },
    PontrjaginValue { preset: H6, connection: Minus, raw: "16*t^4*e1234" },
    PontrjaginValue { preset: H6, connection: Chern, raw: "0" },
    PontrjaginValue { preset: H19Minus, connection: Plus, raw: "-16*(3*e1234 + e1256)" },
    PontrjaginValue { preset: H19Minus, connection: Chern, raw: "-16*(e1234 + e1256)" },
];

/// Published `dF`, `T` and `dT` of a preset.
pub struct TorsionData {
    pub preset: PresetName,
    pub df: &'static str,
    pub t: &'static str,
    pub dt: &'static str,
}

pub const TORSION_DATA: &[TorsionData] = &[
    TorsionData {
        preset: Iwasawa,
        df: "t*e136 - t*e145 - t*e235 - t*e246",
        t: "-t*e135 - t*e146 - t*e236 + t*e245",
        dt: "-4*t^2*e1234",
    },
    TorsionData {
        preset: H3,
        df: "2*t*(e12 - e34)*e5",
        t: "-2*t*(e12 - e34)*e6",
        dt: "-8*t^2*e1234",
    },
    TorsionData {
        preset: H2H4H5,
        df: "2*t*e125 + t*(b+1)*e136 + t*(b-1)*e145 - t*(b+1)*e235 + t*(b-1)*e246 - 2*t*e345",
        t: "-2*t*e126 + t*(b-1)*e135 - t*(b+1)*e146 + t*(b-1)*e236 + t*(b+1)*e245 + 2*t*e346",
        dt: "-4*t^2*(b^2 + 3)*e1234",
    },
    TorsionData {
        preset: H6,
        df: "2*t*(e136 - e145)",
        t: "-2*t*(e236 - e245)",
        dt: "-8*t^2*e1234",
    },
    TorsionData {
        preset: H19Minus,
        df: "-2*(e135 + e145 - e235 + e245)",
        t: "2*(e136 + e146 - e236 + e246)",
        dt: "-8*(e1234 + e1256)",
    },
];

/// Pairs `(i, j)`, `i < j`, where the instanton family on `h19minus` has
/// `sigma^i_j = -(lambda e1 + mu e6)`; every other pair has `+(lambda e1 + mu e6)`.
pub const FAMILY_H19_NEGATIVE: &[(usize, usize)] = &[(2, 3), (2, 5), (4, 5)];
pub const FAMILY_H19_P1: &str = "-120*mu^2*e1234";
pub const ABELIAN_P1: &str = "-2*e1234";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connections::connection;
    use crate::exterior::DIM;
    use crate::frames::PresetGeometry;
    use crate::hermitian::HermitianStructure;

    #[test]
    fn tables_match_computed_curvature() {
        let mut bad = Vec::new();
        for table in CURVATURE_TABLES {
            let h = HermitianStructure::new(&PresetGeometry::symbolic(table.preset));
            let cur = connection(&h, table.connection)
                .unwrap()
                .curvature(&h.geometry.structure);
            for i in 0..DIM {
                for j in i + 1..DIM {
                    let want = match Misprint::find(table.preset, table.connection, i + 1, j + 1) {
                        Some(m) => {
                            assert_ne!(cur.form(i, j), &table.expected(i, j).unwrap());
                            parse_form(m.consistent).unwrap()
                        }
                        None => table.expected(i, j).unwrap(),
                    };
                    if cur.form(i, j) != &want {
                        bad.push(format!(
                            "{} {} ({},{}): got {} want {}",
                            table.preset,
                            table.connection,
                            i + 1,
                            j + 1,
                            cur.form(i, j),
                            want
                        ));
                    }
                }
            }
        }
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }

    #[test]
    fn misprinted_entries_contradict_published_p1() {
        let h19 = CURVATURE_TABLES
            .iter()
            .find(|t| t.preset == H19Minus && t.connection == Chern)
            .unwrap();
        let mut raw = KForm::zero(4);
        for i in 0..DIM {
            for j in i + 1..DIM {
                let f = h19.expected(i, j).unwrap();
                raw += &f.wedge(&f);
            }
        }
        let published = PONTRJAGIN_VALUES
            .iter()
            .find(|p| p.preset == H19Minus && p.connection == Chern)
            .unwrap();
        assert_ne!(raw, parse_form(published.raw).unwrap());
    }

    #[test]
    fn torsion_data_matches() {
        for data in TORSION_DATA {
            let h = HermitianStructure::new(&PresetGeometry::symbolic(data.preset));
            let df = h.d(&h.f);
            let t = h.torsion_3form().unwrap();
            assert_eq!(df, parse_form(data.df).unwrap(), "{}", data.preset);
            assert_eq!(t, parse_form(data.t).unwrap(), "{}", data.preset);
            assert_eq!(h.d(&t), parse_form(data.dt).unwrap(), "{}", data.preset);
        }
    }
}
