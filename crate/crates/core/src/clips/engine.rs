use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::class::{ClassLabel, ClassSet, Order, TypeKind};

use super::oracle::{clips_concrete, ConjugatorStrategy, SweepConfig};
use super::reduce::{clips_reduce, Reduction};
use super::tables::clips_type2_type3;
use super::ClipsError;

/// Clips evaluation with memoized results.
///
/// [`ClipsEngine::clips`] is the dispatcher: reductions, closed-form tables
/// for type III × type II, and explicit intersection for the remaining
/// kinds. [`ClipsEngine::concrete`] evaluates every pair by explicit
/// intersection only. Both are safe to call from many threads.
#[derive(Debug, Default)]
pub struct ClipsEngine {
    config: SweepConfig,
    symbolic_cache: Mutex<HashMap<(ClassLabel, ClassLabel), ClassSet>>,
    concrete_cache: Mutex<HashMap<(ClassLabel, ClassLabel, ConjugatorStrategy), ClassSet>>,
}

impl ClipsEngine {
    pub fn new(config: SweepConfig) -> Self {
        Self { config, ..Self::default() }
    }

    pub fn config(&self) -> &SweepConfig {
        &self.config
    }

    /// `[a] ∘ [b]` through the dispatcher.
    pub fn clips(&self, a: ClassLabel, b: ClassLabel) -> Result<ClassSet, ClipsError> {
        let (a, b) = (a.canonicalize()?, b.canonicalize()?);
        if let Some(hit) = self.symbolic_cache.lock().expect("cache lock").get(&(a, b)) {
            return Ok(hit.clone());
        }
        let result = match clips_reduce(a, b) {
            Some(Reduction::Done(set)) => set,
            Some(Reduction::Delegate(x, y)) => self.clips(x, y)?,
            Some(Reduction::Centered(x, y)) => self
                .clips(x, y)?
                .centered_image()
                .expect("clips of type I classes are type I"),
            Some(Reduction::Table { type3, type2 }) => clips_type2_type3(type3, type2)?,
            None => self.concrete(a, b)?,
        };
        self.symbolic_cache.lock().expect("cache lock").insert((a, b), result.clone());
        Ok(result)
    }

    /// `[a] ∘ [b]` by explicit intersection with the configured strategy.
    pub fn concrete(&self, a: ClassLabel, b: ClassLabel) -> Result<ClassSet, ClipsError> {
        self.concrete_with(self.config.strategy, a, b)
    }

    pub fn concrete_with(
        &self,
        strategy: ConjugatorStrategy,
        a: ClassLabel,
        b: ClassLabel,
    ) -> Result<ClassSet, ClipsError> {
        let (a, b) = (a.canonicalize()?, b.canonicalize()?);
        let key = (a, b, strategy);
        if let Some(hit) = self.concrete_cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let config = SweepConfig { strategy, ..self.config };
        let result = clips_concrete(a, b, &config)?;
        self.concrete_cache.lock().expect("cache lock").insert(key, result.clone());
        Ok(result)
    }

    /// Union of `[a] ∘ [b]` over `a ∈ f1`, `b ∈ f2`.
    pub fn clips_families(&self, f1: &ClassSet, f2: &ClassSet) -> Result<ClassSet, ClipsError> {
        let pairs: Vec<(ClassLabel, ClassLabel)> =
            f1.iter().flat_map(|a| f2.iter().map(move |b| (*a, *b))).collect();
        let parts: Result<Vec<ClassSet>, ClipsError> =
            pairs.par_iter().map(|(a, b)| self.clips(*a, *b)).collect();
        Ok(parts?.iter().fold(ClassSet::new(), |acc, s| acc.union(s)))
    }

    /// `[a] ⪯ [b]`: some conjugate of `a` is a subgroup of `b`.
    ///
    /// Decided by explicit intersection: `[a] ⪯ [b]` iff `[a] ∈ [a] ∘ [b]`.
    pub fn class_leq(&self, a: ClassLabel, b: ClassLabel) -> Result<bool, ClipsError> {
        let (a, b) = (a.canonicalize()?, b.canonicalize()?);
        if a == b || a == ClassLabel::TRIVIAL || b == ClassLabel::O3 {
            return Ok(true);
        }
        match (a.order(), b.order()) {
            (Order::Finite(x), Order::Finite(y)) if y % x != 0 => return Ok(false),
            (Order::Infinite, Order::Finite(_)) => return Ok(false),
            _ => {}
        }
        let has_improper = |l: ClassLabel| l.kind() != TypeKind::I;
        if has_improper(a) && !has_improper(b) {
            return Ok(false);
        }
        if a.kind() == TypeKind::II && b.kind() != TypeKind::II {
            return Ok(false);
        }
        Ok(self.concrete(a, b)?.contains(&a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    fn set(s: &str) -> ClassSet {
        ClassSet::parse_list(s).unwrap()
    }

    #[test]
    fn dispatcher_examples() {
        let e = ClipsEngine::default();
        assert_eq!(e.clips(l("O(2)^-"), l("D3+Z2c")).unwrap(), set("1 Z2 Z2^- D3^z"));
        assert_eq!(e.clips(l("1"), l("I+Z2c")).unwrap(), set("1"));
        let d4 = e.clips(l("D4"), l("D4")).unwrap();
        assert!(d4.contains(&l("D4")) && d4.contains(&l("1")));
    }

    #[test]
    fn partial_order_examples() {
        let e = ClipsEngine::default();
        assert!(e.class_leq(l("Z2"), l("D4")).unwrap());
        assert!(!e.class_leq(l("Z3"), l("Z4")).unwrap());
        assert!(e.class_leq(l("Z3"), l("Z6^-")).unwrap());
        assert!(!e.class_leq(l("Z2"), l("Z6^-")).unwrap());
        assert!(e.class_leq(l("Z3"), l("Z6")).unwrap());
        for n in 1..=6 {
            let dd = ClassLabel::TypeIII(crate::class::Improper::DihedralD(n)).canonicalize().unwrap();
            assert!(e.class_leq(l("D2^z"), dd).unwrap(), "D2^z ⪯ {dd}");
        }
        assert!(e.class_leq(l("SO(2)"), l("O(2)^-")).unwrap());
        assert!(!e.class_leq(l("O(2)^-"), l("O(2)")).unwrap());
        assert!(e.class_leq(l("D4^d"), l("O^-")).unwrap());
    }

    #[test]
    fn families() {
        let e = ClipsEngine::default();
        let any = set("D3 Z4^- O(2)");
        assert_eq!(e.clips_families(&set("1"), &any).unwrap(), set("1"));
        assert_eq!(e.clips_families(&set("O(3)"), &any).unwrap(), any);
        let sym = set("D2+Z2c O(2)+Z2c O(3)");
        let both = e.clips_families(&sym, &sym).unwrap();
        assert!(both.contains(&l("D2+Z2c")) && both.contains(&l("O(3)")));
    }
}
