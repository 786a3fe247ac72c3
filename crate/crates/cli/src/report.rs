//! Machine-readable reports. Every rational is rendered as a `p/q` string
//! (integers as `p`), every container is ordered, and serialization is
//! deterministic: the same configuration and seed produce identical bytes.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub vars: Vec<String>,
    pub f: String,
    pub weights: Vec<String>,
    pub k: Vec<u32>,
    pub degree_bound: u32,
    pub seed: u64,
    pub stages: Vec<Stage>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub status: String,
    pub data: StageData,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum StageData {
    Wqh(WqhData),
    Logder(LogderData),
    Basis(BasisData),
    Spencer(SpencerData),
    Verify(VerifyData),
    ExtWitness(ExtWitnessData),
    Annihilator(AnnihilatorData),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WqhData {
    pub homogeneous: bool,
    /// Weight of `f` when homogeneous.
    pub weight: Option<String>,
    /// Graded parts of `f`, lowest weight first.
    pub parts: Vec<PartData>,
    /// Weights rescaled so that `f` has weight one, when possible.
    pub normalized_weights: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartData {
    pub weight: String,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogderData {
    pub generators: Vec<FieldData>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldData {
    pub field: String,
    pub cofactor: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisData {
    pub chi: String,
    pub deltas: Vec<String>,
    pub nus: Vec<String>,
    /// `None` for an honest polynomial basis (determinant exactly `f`);
    /// the non-constant unit `u` with determinant `u * f` when the basis
    /// is only valid as a germ at the origin.
    pub germ_unit: Option<String>,
    pub brackets: Vec<BracketData>,
    pub inequalities: Vec<InequalityData>,
    pub all_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketData {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityData {
    pub subset: Vec<usize>,
    pub value: String,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpencerData {
    pub complexes: Vec<ComplexData>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexData {
    pub k: u32,
    pub levels: Vec<LevelData>,
    pub diagonal_constants: Vec<DiagonalData>,
    pub complex_property: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelData {
    pub level: usize,
    pub sources: usize,
    pub targets: usize,
    pub nonzero_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalData {
    pub wedge: String,
    pub value: String,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyData {
    pub dd_zero_trials: usize,
    pub dd_zero_ok: bool,
    pub euler_trials: usize,
    pub euler_ok: bool,
    /// The deliberately resonant probe was rejected with the weight named.
    pub resonance_rejected: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtWitnessData {
    pub runs: Vec<WitnessRunData>,
    pub slices: Option<SliceData>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRunData {
    pub k: u32,
    pub level: usize,
    pub trials: usize,
    pub witnesses: usize,
    /// Diagnostic when the twist is refused (k = 0).
    pub refused: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceData {
    pub max_weight: String,
    pub entries: Vec<SliceEntry>,
    pub all_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceEntry {
    pub level: usize,
    pub weight: String,
    pub kernel: usize,
    pub image: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnihilatorData {
    pub tables: Vec<AnnihilatorTable>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnihilatorTable {
    pub k: u32,
    /// Operators from the adapted basis and whether each kills `1/f^k`.
    pub adapted: Vec<AnnihilatorEntry>,
    /// Operators from the raw logarithmic generators.
    pub from_derivations: Vec<AnnihilatorEntry>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnihilatorEntry {
    pub operator: String,
    pub annihilates: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "f = {}  in Q[{}]", self.f, self.vars.join(", "));
        let _ = writeln!(out, "weights = ({})", self.weights.join(", "));
        let _ = writeln!(
            out,
            "k = {:?}   degree bound = {}   seed = {}",
            self.k, self.degree_bound, self.seed
        );
        for stage in &self.stages {
            let _ = writeln!(out, "\n[{}] {}", stage.name, stage.status);
            render_stage(&mut out, &stage.data);
        }
        out
    }
}

fn render_stage(out: &mut String, data: &StageData) {
    match data {
        StageData::Wqh(d) => {
            let _ = writeln!(out, "  homogeneous: {}", d.homogeneous);
            if let Some(w) = &d.weight {
                let _ = writeln!(out, "  weight: {w}");
            }
            for p in &d.parts {
                let _ = writeln!(out, "  part {}: {}", p.weight, p.polynomial);
            }
            if let Some(nw) = &d.normalized_weights {
                let _ = writeln!(out, "  normalized weights: ({})", nw.join(", "));
            }
        }
        StageData::Logder(d) => {
            for g in &d.generators {
                let _ = writeln!(out, "  {}   cofactor {}", g.field, g.cofactor);
            }
        }
        StageData::Basis(d) => {
            let _ = writeln!(out, "  chi = {}", d.chi);
            for (delta, nu) in d.deltas.iter().zip(&d.nus) {
                let _ = writeln!(out, "  delta = {delta}   nu = {nu}");
            }
            match &d.germ_unit {
                None => {
                    let _ = writeln!(out, "  determinant = f exactly");
                }
                Some(u) => {
                    let _ = writeln!(out, "  determinant = ({u}) * f   (germ at 0 only)");
                }
            }
            for b in &d.brackets {
                let _ = writeln!(
                    out,
                    "  [delta_{}, delta_{}] coefficients: {}",
                    b.i,
                    b.j,
                    b.coefficients.join(", ")
                );
            }
            for ineq in &d.inequalities {
                let _ = writeln!(
                    out,
                    "  1 - sum(nu, J={:?}) = {}  positive: {}",
                    ineq.subset, ineq.value, ineq.positive
                );
            }
            let _ = writeln!(out, "  all inequalities positive: {}", d.all_positive);
        }
        StageData::Spencer(d) => {
            for c in &d.complexes {
                let _ = writeln!(out, "  twist k = {}", c.k);
                for l in &c.levels {
                    let _ = writeln!(
                        out,
                        "    level {}: {} -> {} wedges, {} nonzero entries",
                        l.level, l.sources, l.targets, l.nonzero_entries
                    );
                }
                for diag in &c.diagonal_constants {
                    let _ = writeln!(
                        out,
                        "    diagonal {}: {} positive: {}",
                        diag.wedge, diag.value, diag.positive
                    );
                }
                let _ = writeln!(out, "    composites vanish: {}", c.complex_property);
            }
        }
        StageData::Verify(d) => {
            let _ = writeln!(
                out,
                "  d(d(u)) = 0 on {} random tuples: {}",
                d.dd_zero_trials, d.dd_zero_ok
            );
            let _ = writeln!(
                out,
                "  euler round trips on {} draws: {}",
                d.euler_trials, d.euler_ok
            );
            let _ = writeln!(out, "  resonant probe rejected: {}", d.resonance_rejected);
        }
        StageData::ExtWitness(d) => {
            for r in &d.runs {
                match &r.refused {
                    Some(msg) => {
                        let _ = writeln!(out, "  k = {}: refused ({msg})", r.k);
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "  k = {}, level {}: {}/{} witnesses verified",
                            r.k, r.level, r.witnesses, r.trials
                        );
                    }
                }
            }
            if let Some(s) = &d.slices {
                let _ = writeln!(
                    out,
                    "  graded slices up to weight {}: {} entries, exact: {}",
                    s.max_weight,
                    s.entries.len(),
                    s.all_exact
                );
            }
        }
        StageData::Annihilator(d) => {
            for t in &d.tables {
                let _ = writeln!(out, "  k = {}", t.k);
                if let Some(n) = &t.note {
                    let _ = writeln!(out, "    note: {n}");
                }
                for e in &t.adapted {
                    let _ = writeln!(out, "    {}   annihilates: {}", e.operator, e.annihilates);
                }
                for e in &t.from_derivations {
                    let _ = writeln!(
                        out,
                        "    {}   annihilates: {}   (from raw generators)",
                        e.operator, e.annihilates
                    );
                }
            }
        }
    }
}
