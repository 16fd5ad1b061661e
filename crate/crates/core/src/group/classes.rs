use serde::Serialize;

use super::FiniteGroup;

/// Conjugacy classes, identity class first, then ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    #[serde(skip)]
    class_of: Vec<usize>,
    #[serde(skip)]
    reps: Vec<usize>,
}

impl ConjugacyClasses {
    pub(crate) fn compute(g: &FiniteGroup) -> Self {
        let n = g.order();
        let gens = g.generators().to_vec();
        let mut assigned = vec![false; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut order: Vec<usize> = vec![g.identity()];
        order.extend(g.elements().filter(|&x| x != g.identity()));
        for x in order {
            if assigned[x] {
                continue;
            }
            assigned[x] = true;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &t in &gens {
                    let c = g.conj(y, t);
                    if !assigned[c] {
                        assigned[c] = true;
                        orbit.push(c);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let mut class_of = vec![0; n];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let reps = classes.iter().map(|c| c[0]).collect();
        ConjugacyClasses { classes, class_of, reps }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn rep(&self, k: usize) -> usize {
        self.reps[k]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].len()
    }
}
