//! Named clips evaluation strategies.

use std::fmt;

use serde::Serialize;

use crate::class::{ClassLabel, ClassSet};

use super::engine::ClipsEngine;
use super::oracle::ConjugatorStrategy;
use super::ClipsError;

/// A way of evaluating `[lhs] ∘ [rhs]`.
pub trait ClipsMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn clips(&self, engine: &ClipsEngine, lhs: ClassLabel, rhs: ClassLabel) -> Result<ClassSet, ClipsError>;
}

struct Symbolic;

impl ClipsMethod for Symbolic {
    fn name(&self) -> &'static str {
        "symbolic"
    }

    fn description(&self) -> &'static str {
        "reduction rules, closed-form tables for type III x type II, explicit intersection otherwise"
    }

    fn clips(&self, engine: &ClipsEngine, lhs: ClassLabel, rhs: ClassLabel) -> Result<ClassSet, ClipsError> {
        engine.clips(lhs, rhs)
    }
}

struct Oracle;

impl ClipsMethod for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "explicit intersection over all axis-pair alignments and generic rotations"
    }

    fn clips(&self, engine: &ClipsEngine, lhs: ClassLabel, rhs: ClassLabel) -> Result<ClassSet, ClipsError> {
        engine.concrete_with(ConjugatorStrategy::Alignment, lhs, rhs)
    }
}

struct Grid;

impl ClipsMethod for Grid {
    fn name(&self) -> &'static str {
        "grid"
    }

    fn description(&self) -> &'static str {
        "explicit intersection over single-axis alignments with a uniform twist grid"
    }

    fn clips(&self, engine: &ClipsEngine, lhs: ClassLabel, rhs: ClassLabel) -> Result<ClassSet, ClipsError> {
        engine.concrete_with(ConjugatorStrategy::AngularGrid, lhs, rhs)
    }
}

/// The available methods, looked up by name.
pub struct MethodRegistry {
    methods: Vec<Box<dyn ClipsMethod>>,
}

impl Default for MethodRegistry {
    fn default() -> Self {
        Self { methods: vec![Box::new(Symbolic), Box::new(Oracle), Box::new(Grid)] }
    }
}

impl MethodRegistry {
    pub fn register(&mut self, method: Box<dyn ClipsMethod>) {
        self.methods.retain(|m| m.name() != method.name());
        self.methods.push(method);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ClipsMethod, ClipsError> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| ClipsError::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ClipsMethod> + '_ {
        self.methods.iter().map(|m| m.as_ref())
    }
}

/// Which methods a query runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodChoice {
    Single(String),
    /// Symbolic and oracle, compared.
    Both,
}

impl fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodChoice::Single(name) => f.write_str(name),
            MethodChoice::Both => f.write_str("both"),
        }
    }
}

impl std::str::FromStr for MethodChoice {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "both" => MethodChoice::Both,
            other => MethodChoice::Single(other.to_string()),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClipsQuery {
    pub lhs: ClassLabel,
    pub rhs: ClassLabel,
    pub method: MethodChoice,
}

/// Results of a query, one per method run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QueryOutcome {
    pub results: Vec<(String, ClassSet)>,
}

impl QueryOutcome {
    /// `Some(true)` when several methods ran and agree.
    pub fn agreement(&self) -> Option<bool> {
        (self.results.len() > 1).then(|| self.results.windows(2).all(|w| w[0].1 == w[1].1))
    }
}

impl ClipsQuery {
    pub fn run(&self, engine: &ClipsEngine, registry: &MethodRegistry) -> Result<QueryOutcome, ClipsError> {
        let names: Vec<String> = match &self.method {
            MethodChoice::Single(name) => vec![name.clone()],
            MethodChoice::Both => vec!["symbolic".into(), "oracle".into()],
        };
        let mut results = Vec::new();
        for name in names {
            let method = registry.get(&name)?;
            results.push((name, method.clips(engine, self.lhs, self.rhs)?));
        }
        Ok(QueryOutcome { results })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn registry_lookup() {
        let r = MethodRegistry::default();
        assert_eq!(r.names(), vec!["symbolic", "oracle", "grid"]);
        assert!(r.get("nope").is_err());
    }

    #[test]
    fn both_methods_agree_on_published_cell() {
        let q = ClipsQuery { lhs: l("Z4^-"), rhs: l("Z4+Z2c"), method: MethodChoice::Both };
        let out = q.run(&ClipsEngine::default(), &MethodRegistry::default()).unwrap();
        assert_eq!(out.agreement(), Some(true));
        assert_eq!(out.results[0].1, ClassSet::parse_list("1 Z4^-").unwrap());
    }
}
