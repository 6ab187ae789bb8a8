use super::rotation::{same_line, RotationElement, Vec3};
use super::GroupError;

/// Largest group `close_group` will build before giving up.
pub const ORDER_CAP: usize = 256;

/// A line through the origin carrying non-identity elements of a group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisLine {
    pub direction: Vec3,
    /// Number of proper rotations about the line, identity included.
    pub fold: u32,
}

/// A finite subgroup of O(3) given by its elements.
#[derive(Debug, Clone)]
pub struct ElementSet {
    elements: Vec<RotationElement>,
}

impl ElementSet {
    pub fn trivial() -> Self {
        Self { elements: vec![RotationElement::identity()] }
    }

    /// Wraps elements that are already known to form a group.
    pub fn from_elements(elements: Vec<RotationElement>) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[RotationElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &RotationElement) -> bool {
        self.elements.iter().any(|e| e.approx_eq(x))
    }

    pub fn contains_central_inversion(&self) -> bool {
        self.contains(&-RotationElement::identity())
    }

    /// Identity, inverses and closure under products, checked exhaustively.
    pub fn is_group(&self) -> bool {
        if !self.contains(&RotationElement::identity()) {
            return false;
        }
        if !self.elements.iter().all(|x| self.contains(&x.inverse())) {
            return false;
        }
        self.elements
            .iter()
            .all(|x| self.elements.iter().all(|y| self.contains(&(*x * *y))))
    }

    pub fn conjugated_by(&self, g: &RotationElement) -> ElementSet {
        Self { elements: self.elements.iter().map(|x| x.conjugated_by(g)).collect() }
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        self.filter(|x| other.contains(x))
    }

    pub fn filter(&self, keep: impl Fn(&RotationElement) -> bool) -> ElementSet {
        Self { elements: self.elements.iter().copied().filter(|x| keep(x)).collect() }
    }

    pub fn proper_part(&self) -> ElementSet {
        self.filter(RotationElement::is_proper)
    }

    pub fn improper_part(&self) -> ElementSet {
        self.filter(|x| !x.is_proper())
    }

    /// `Γ ∪ (−Γ)`.
    pub fn with_central_inversion(&self) -> ElementSet {
        let mut elements = self.elements.clone();
        elements.extend(self.elements.iter().map(|x| -*x));
        Self { elements }
    }

    /// `Γ₊ ∪ (−γ Γ₊)` for a coset representative `γ` of `Γ₊` in a larger
    /// rotation group.
    pub fn with_twisted_coset(&self, gamma: &RotationElement) -> ElementSet {
        let mut elements = self.elements.clone();
        elements.extend(self.elements.iter().map(|x| -(*gamma * *x)));
        Self { elements }
    }

    /// Smallest max-norm distance between two distinct elements.
    pub fn min_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, x) in self.elements.iter().enumerate() {
            for y in &self.elements[i + 1..] {
                best = best.min(x.distance(y));
            }
        }
        best
    }

    /// Distinct lines of all elements other than ±Id, with the number of
    /// proper rotations about each.
    pub fn axis_lines(&self) -> Vec<AxisLine> {
        let mut lines: Vec<AxisLine> = Vec::new();
        for x in &self.elements {
            let Some(u) = x.axis() else { continue };
            let proper = u32::from(x.is_proper());
            match lines.iter_mut().find(|l| same_line(&l.direction, &u)) {
                Some(line) => line.fold += proper,
                None => lines.push(AxisLine { direction: u, fold: 1 + proper }),
            }
        }
        lines
    }

    /// One line from each orbit of the group acting on `lines`.
    pub fn orbit_representatives(&self, lines: &[AxisLine]) -> Vec<AxisLine> {
        let mut covered = vec![false; lines.len()];
        let mut reps = Vec::new();
        for i in 0..lines.len() {
            if covered[i] {
                continue;
            }
            reps.push(lines[i]);
            for g in &self.elements {
                let image = g.apply(&lines[i].direction);
                if let Some(j) = lines.iter().position(|l| same_line(&l.direction, &image)) {
                    covered[j] = true;
                }
            }
        }
        reps
    }
}

/// Closes a generator list under multiplication.
pub fn close_group(generators: &[RotationElement]) -> Result<ElementSet, GroupError> {
    let mut elements = vec![RotationElement::identity()];
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier];
        frontier += 1;
        for g in generators {
            let y = x * *g;
            if !elements.iter().any(|e| e.approx_eq(&y)) {
                if elements.len() == ORDER_CAP {
                    return Err(GroupError::OrderCapExceeded(ORDER_CAP));
                }
                elements.push(y);
            }
        }
    }
    Ok(ElementSet { elements })
}
