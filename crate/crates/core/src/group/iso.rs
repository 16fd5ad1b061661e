//! Brute-force isomorphism search, intended for test oracles on small groups.

use super::{FiniteGroup, GroupHom};

/// Largest order the search accepts.
pub const MAX_ORDER: usize = 64;

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut p = g.element_orders().to_vec();
    p.sort_unstable();
    p
}

/// An isomorphism `g -> h`, if one exists. Panics above [`MAX_ORDER`].
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupHom> {
    assert!(g.order() <= MAX_ORDER && h.order() <= MAX_ORDER, "isomorphism search is limited to order {MAX_ORDER}");
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return None;
    }
    if g.conjugacy_classes().len() != h.conjugacy_classes().len() {
        return None;
    }
    let gens = g.generators().to_vec();
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = h.identity();
    let mut used = vec![false; h.order()];
    used[h.identity()] = true;
    if extend(g, h, &gens, 0, &mut map, &mut used) {
        Some(GroupHom::new_unchecked(g.clone(), h.clone(), map))
    } else {
        None
    }
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    if i == gens.len() {
        return true;
    }
    let s = gens[i];
    if map[s] != usize::MAX {
        return extend(g, h, gens, i + 1, map, used);
    }
    let ord = g.element_order(s);
    for t in h.elements() {
        if used[t] || h.element_order(t) != ord {
            continue;
        }
        let (saved_map, saved_used) = (map.clone(), used.clone());
        if close_partial(g, h, &gens[..=i], s, t, map, used) && extend(g, h, gens, i + 1, map, used) {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Extends a homomorphism defined on `<gens without s>` by `s -> t`,
/// checking consistency and injectivity.
fn close_partial(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    s: usize,
    t: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let mut domain: Vec<usize> = g.elements().filter(|&x| map[x] != usize::MAX).collect();
    let image_of_gen = |gen: usize, map: &[usize]| if gen == s { t } else { map[gen] };
    let mut i = 0;
    while i < domain.len() {
        let x = domain[i];
        for &r in gens {
            let y = g.mul(x, r);
            let img = h.mul(map[x], image_of_gen(r, map));
            if map[y] == usize::MAX {
                if used[img] {
                    return false;
                }
                map[y] = img;
                used[img] = true;
                domain.push(y);
            } else if map[y] != img {
                return false;
            }
        }
        i += 1;
    }
    true
}
