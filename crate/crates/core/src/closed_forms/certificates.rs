//! Optimal TDTCs of cycles and paths: a literal table for the small orders,
//! otherwise singleton classes on a minimum total mixed dominating set plus
//! an exact coloring of what remains of the total graph.

use serde::{Deserialize, Serialize};

use super::{min_tmds, stored_coloring, Family, FamilyInstance};
use crate::error::Result;
use crate::graph::total_graph;
use crate::verifiers::{tdc_from_tds, Coloring, RemainderColoring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    StoredTable,
    Constructed,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::StoredTable => "stored-table",
            Provenance::Constructed => "constructed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCertificate {
    pub instance: FamilyInstance,
    pub coloring: Coloring,
    pub provenance: Provenance,
}

pub fn tdtc_certificate_cycle(n: usize) -> Result<FamilyCertificate> {
    tdtc_certificate(Family::Cycle, n)
}

pub fn tdtc_certificate_path(n: usize) -> Result<FamilyCertificate> {
    tdtc_certificate(Family::Path, n)
}

pub fn tdtc_certificate(family: Family, n: usize) -> Result<FamilyCertificate> {
    let instance = FamilyInstance::new(family, n)?;
    if let Some(coloring) = stored_coloring(family, n) {
        return Ok(FamilyCertificate {
            instance,
            coloring,
            provenance: Provenance::StoredTable,
        });
    }
    let t = total_graph(&instance.graph());
    let s = t.indices_of(&min_tmds(family, n)?)?;
    let coloring = tdc_from_tds(&t.graph, &s, RemainderColoring::Exact)?.from_total(&t)?;
    Ok(FamilyCertificate {
        instance,
        coloring,
        provenance: Provenance::Constructed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::chi_tt;
    use crate::verifiers::is_tdtc;

    #[test]
    fn small_certificates_are_tight() {
        for (family, n) in [(Family::Cycle, 3), (Family::Cycle, 10), (Family::Path, 9), (Family::Path, 7)] {
            let c = tdtc_certificate(family, n).unwrap();
            let g = family.graph(n).unwrap();
            assert!(is_tdtc(&g, &c.coloring).unwrap().valid, "{family} {n}");
            assert_eq!(c.coloring.len(), chi_tt(family, n).unwrap().value, "{family} {n}");
        }
    }

    #[test]
    fn cycle_21_is_constructed() {
        let c = tdtc_certificate_cycle(21).unwrap();
        assert_eq!(c.provenance, Provenance::Constructed);
        assert_eq!(c.coloring.len(), 15);
    }

    #[test]
    fn provenance_serializes_kebab() {
        assert_eq!(serde_json::to_string(&Provenance::StoredTable).unwrap(), "\"stored-table\"");
    }
}
