use std::collections::BTreeMap;
use std::fmt::Write as _;

use peiffer_core::ambient::{Ambient, ElementRepr, Fingerprint, Theory};
use peiffer_core::enumerate::PropertyReport;
use serde::{Deserialize, Serialize};

/// A named object (or subobject, materialised) by order and isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub name: String,
    pub order: u64,
    pub fingerprint: Fingerprint,
    /// Every element, only with `--witness`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<ElementRepr>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub elements: Vec<ElementRepr>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub task: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theory: Option<Theory>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<Summary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    /// Named flags such as `closure_was_proper` or `projectivity_not_verified`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub caveats: BTreeMap<String, bool>,
    /// Named checks with a short outcome, in evaluation order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub properties: Vec<PropertyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(task: &str, theory: Theory) -> Self {
        Self {
            task: task.to_string(),
            theory: Some(theory),
            ..Self::default()
        }
    }

    pub fn object<A: Ambient>(&mut self, name: &str, a: &A, members: bool) {
        self.objects.push(Summary {
            name: name.to_string(),
            order: a.size(),
            fingerprint: a.fingerprint(),
            members: members.then(|| a.elements().iter().map(|e| a.repr(e)).collect()),
        });
    }

    pub fn subobject<A: Ambient>(&mut self, name: &str, a: &A, s: &A::Sub, members: bool) {
        let (obj, _) = a.sub_object(s);
        self.objects.push(Summary {
            name: name.to_string(),
            order: a.sub_size(s),
            fingerprint: obj.fingerprint(),
            members: members.then(|| a.sub_elements(s).iter().map(|e| a.repr(e)).collect()),
        });
    }

    pub fn witness<A: Ambient>(&mut self, name: &str, a: &A, elements: &[A::Elem]) {
        self.witnesses.push(Witness {
            name: name.to_string(),
            elements: elements.iter().map(|e| a.repr(e)).collect(),
        });
    }

    pub fn caveat(&mut self, name: &str, value: bool) {
        self.caveats.insert(name.to_string(), value);
    }

    pub fn check(&mut self, name: &str, outcome: impl Into<String>) {
        self.checks.push((name.to_string(), outcome.into()));
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "task: {}", self.task);
        if let Some(t) = self.theory {
            let _ = writeln!(s, "theory: {t}");
        }
        if let Some(v) = self.verdict {
            let _ = writeln!(s, "verdict: {v}");
        }
        for o in &self.objects {
            let _ = writeln!(s, "{}: order {} ({})", o.name, o.order, o.fingerprint);
            if let Some(m) = &o.members {
                let _ = writeln!(s, "  members: {}", join(m));
            }
        }
        for w in &self.witnesses {
            let _ = writeln!(s, "witness {}: {}", w.name, join(&w.elements));
        }
        for (name, outcome) in &self.checks {
            let _ = writeln!(s, "check {name}: {outcome}");
        }
        for (k, v) in &self.counts {
            let _ = writeln!(s, "count {k}: {v}");
        }
        for p in &self.properties {
            let _ = writeln!(
                s,
                "property {} ({}, bound {}, seed {}): instances {}, passed {}, failures: {}",
                p.property, p.theory, p.bound, p.seed, p.instances, p.passed, p.failed
            );
            if let Some(w) = &p.first_failure {
                let _ = writeln!(s, "  first failure #{} {}: {}", w.index, w.label, w.detail);
            }
        }
        for (k, v) in &self.caveats {
            let _ = writeln!(s, "caveat {k}: {v}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(s, "elapsed: {ms} ms");
        }
        s
    }
}

fn join(elements: &[ElementRepr]) -> String {
    elements
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
