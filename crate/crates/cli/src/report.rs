//! Report assembly: every command produces one `Report`, rendered as text or
//! as JSON whose polynomial witnesses re-parse byte-identically.

use serde_json::{json, Value};

use prismforge_core::charp::{RootClosureCertificate, RootClosureVerdict};
use prismforge_core::groebner::stats;
use prismforge_core::prism::{HypothesisCertificate, Verdict};
use prismforge_core::tower::{AxiomCertificate, PillarReport, TiltReport, TowerLevel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub text: Vec<String>,
    pub payload: Value,
    /// 0 = holds, 1 = hypothesis/axiom fails (still a valid run).
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str, digest: &str) -> Report {
        Report {
            command: command.to_string(),
            input_digest: digest.to_string(),
            text: Vec::new(),
            payload: json!({}),
            exit_code: 0,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut out = String::new();
                for l in &self.text {
                    out.push_str(l);
                    out.push('\n');
                }
                out
            }
            OutputFormat::Json => {
                let full = json!({
                    "command": self.command,
                    "format": "json",
                    "input_digest": self.input_digest,
                    "resource_usage": {
                        "pairs_processed": stats::pairs_processed(),
                        "bases_computed": stats::bases_computed(),
                    },
                    "verdicts": self.payload,
                });
                serde_json::to_string_pretty(&full).expect("serializable report")
            }
        }
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({ "pass": v.pass, "detail": v.detail })
}

pub fn root_closure_json(c: &RootClosureCertificate) -> Value {
    let levels: Vec<Value> = c
        .per_level
        .iter()
        .map(|l| {
            json!({
                "level": l.level,
                "injective": l.injective,
                "witness": l.witness.as_ref().map(|w| w.to_string()),
            })
        })
        .collect();
    let verdict = match &c.verdict {
        RootClosureVerdict::CertifiedUpTo(k) => json!({ "certified_up_to": k }),
        RootClosureVerdict::FailedAt(i, w) => {
            json!({ "failed_at": i, "witness": w.to_string() })
        }
    };
    json!({ "levels_checked": c.levels_checked, "per_level": levels, "verdict": verdict })
}

pub fn hypothesis_json(cert: &HypothesisCertificate) -> Value {
    json!({
        "delta_stable": verdict_json(&cert.delta_stable),
        "distinguished": verdict_json(&cert.distinguished),
        "p_torsion_free": verdict_json(&cert.p_torsion_free),
        "d_nzd_mod_p": verdict_json(&cert.d_nzd_mod_p),
        "root_closed": cert.root_closed.as_ref().map(root_closure_json),
        "mod_p_reduced": cert.mod_p_reduced.as_ref().map(verdict_json),
        "overall": cert.overall,
        "notes": cert.notes,
    })
}

pub fn hypothesis_text(report: &mut Report, cert: &HypothesisCertificate) {
    report.line(format!("delta-stable        {}", cert.delta_stable));
    report.line(format!("distinguished       {}", cert.distinguished));
    report.line(format!("p-torsion-free      {}", cert.p_torsion_free));
    report.line(format!("d nzd mod (p, J)    {}", cert.d_nzd_mod_p));
    report.line(format!("p-root closed       {}", cert.root_closed_verdict()));
    for n in &cert.notes {
        report.line(format!("note: {n}"));
    }
    report.line(format!(
        "overall             {}",
        if cert.overall { "PASS" } else { "FAIL" }
    ));
}

pub fn tower_level_json(level: &TowerLevel, fractional: bool) -> Value {
    let mut v = json!({
        "index": level.index,
        "relations": level.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "transition": level.transition,
    });
    if let Some(aux) = &level.aux {
        v["aux"] = json!({
            "variable": aux.variable,
            "relation": aux.relation.to_string(),
            "meaning": aux.meaning,
        });
    }
    if fractional {
        if let Ok(frac) = level.fractional_presentation() {
            v["fractional"] = json!(frac);
        }
    }
    v
}

pub fn tilt_json(t: &TiltReport) -> Value {
    json!({
        "ring": t.ctx.to_string(),
        "relations": t.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "completion_at": t.completion_at.as_ref().map(|d| d.to_string()),
        "transition": t.transition,
        "extra_variable": t.extra_variable,
    })
}

pub fn pillars_json(p: &PillarReport) -> Value {
    json!({
        "defining_identity_ok": p.defining_identity_ok,
        "unit_numerator": p.unit_numerator.to_string(),
        "unit_denominator": p.unit_denominator.to_string(),
        "denominator_is_local_unit": p.denominator_is_local_unit,
        "congruence_certified": p.congruence_certified,
        "pillar_power_in_p": p.pillar_power_in_p,
        "p_in_pillar_power": p.p_in_pillar_power,
        "levels": p.levels.iter().map(|(i, f)| json!({"index": i, "generator": f.to_string()})).collect::<Vec<_>>(),
    })
}

pub fn axioms_json(c: &AxiomCertificate) -> Value {
    json!({
        "levels_checked": c.levels_checked,
        "all_pass": c.all_pass,
        "verdicts": c.verdicts.iter().map(|v| json!({
            "axiom": v.axiom.to_string(),
            "level": v.level,
            "method": v.method.to_string(),
            "pass": v.pass,
            "detail": v.detail,
            "witness": v.witness.as_ref().map(|w| w.to_string()),
        })).collect::<Vec<_>>(),
    })
}
