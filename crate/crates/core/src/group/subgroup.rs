use std::fmt;

use fixedbitset::FixedBitSet;

use super::{FiniteGroup, GroupError, GroupHom, Result};

/// A subgroup of a specific group, held as a sorted element set.
#[derive(Clone)]
pub struct SubgroupRef {
    group: FiniteGroup,
    elements: Vec<usize>,
    members: FixedBitSet,
}

impl fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupRef").field("order", &self.order()).field("elements", &self.elements).finish()
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl Eq for SubgroupRef {}

impl SubgroupRef {
    pub(crate) fn from_bits(group: FiniteGroup, members: FixedBitSet) -> Self {
        let elements = members.ones().collect();
        SubgroupRef { group, elements, members }
    }

    pub(crate) fn from_sorted(group: FiniteGroup, elements: Vec<usize>) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        for &g in &elements {
            members.insert(g);
        }
        SubgroupRef { group, elements, members }
    }

    /// Checks closure; `elements` may be in any order.
    pub fn new(group: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&g| g >= group.order()) {
            return Err(GroupError::ElementOutOfRange(bad));
        }
        let s = Self::from_sorted(group.clone(), elements);
        if !s.contains(group.identity()) {
            return Err(GroupError::Malformed("subset does not contain the identity".into()));
        }
        for &a in &s.elements {
            if !s.contains(group.inv(a)) {
                return Err(GroupError::Malformed(format!("subset not closed under inverse at {a}")));
            }
            for &b in &s.elements {
                if !s.contains(group.mul(a, b)) {
                    return Err(GroupError::Malformed(format!("subset not closed at ({a}, {b})")));
                }
            }
        }
        Ok(s)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub(crate) fn into_bits(self) -> FixedBitSet {
        self.members
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &SubgroupRef) -> bool {
        self.group == other.group && self.members.is_subset(&other.members)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let g = &self.group;
        let mut gens = Vec::new();
        let mut members = g.singleton_set(g.identity());
        for &x in &self.elements {
            if !members.contains(x) {
                members = g.extend_subgroup(&members, &gens, x);
                gens.push(x);
            }
        }
        gens
    }

    /// Returns a conjugating witness if the subgroup is not normal.
    pub fn check_normal(&self) -> Result<()> {
        let g = &self.group;
        let gens = g.generators().to_vec();
        for &t in &gens {
            for &x in self.generators().iter() {
                if !self.contains(g.conj(x, t)) {
                    return Err(GroupError::NotNormal { conjugator: t, element: x });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        self.check_normal().is_ok()
    }

    pub fn intersection(&self, other: &SubgroupRef) -> SubgroupRef {
        assert!(self.group == other.group, "subgroups of different groups");
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        SubgroupRef::from_bits(self.group.clone(), bits)
    }

    pub fn join(&self, other: &SubgroupRef) -> SubgroupRef {
        assert!(self.group == other.group, "subgroups of different groups");
        let g = &self.group;
        let mut gens = self.generators();
        let mut members = self.members.clone();
        for x in other.generators() {
            if !members.contains(x) {
                members = g.extend_subgroup(&members, &gens, x);
                gens.push(x);
            }
        }
        SubgroupRef::from_bits(g.clone(), members)
    }

    /// `x^-1 S x`
    pub fn conjugate(&self, x: usize) -> SubgroupRef {
        let g = &self.group;
        let mut bits = FixedBitSet::with_capacity(g.order());
        for &s in &self.elements {
            bits.insert(g.conj(s, x));
        }
        SubgroupRef::from_bits(g.clone(), bits)
    }

    /// Largest normal subgroup of the ambient group contained in this one.
    pub fn core(&self) -> SubgroupRef {
        let g = &self.group;
        let mut bits = self.members.clone();
        for x in g.elements() {
            let c = self.conjugate(x);
            bits.intersect_with(&c.members);
        }
        SubgroupRef::from_bits(g.clone(), bits)
    }

    /// The subgroup as a standalone group (elements in increasing parent
    /// index order) together with its embedding into the parent.
    pub fn as_group(&self) -> (FiniteGroup, GroupHom) {
        let g = &self.group;
        let m = self.order();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            local[x] = i;
        }
        let mut mul = Vec::with_capacity(m * m);
        for &a in &self.elements {
            for &b in &self.elements {
                mul.push(local[g.mul(a, b)] as u32);
            }
        }
        let inv = self.elements.iter().map(|&a| local[g.inv(a)] as u32).collect();
        let labels = self.elements.iter().map(|&a| g.label(a).to_string()).collect();
        let names = g
            .names()
            .iter()
            .filter(|(_, x)| self.contains(*x))
            .map(|(n, x)| (n.clone(), local[*x]))
            .collect();
        let generators = self.generators().into_iter().map(|x| local[x]).collect();
        let sub = FiniteGroup::from_raw(mul, inv, local[g.identity()], labels, names, generators);
        let embed = GroupHom::new_unchecked(sub.clone(), g.clone(), self.elements.clone());
        (sub, embed)
    }
}
