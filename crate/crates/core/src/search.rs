//! Backtracking search for structure-preserving maps between finite carriers.
//!
//! A [`MapSearch`] enumerates maps `f: 0..src -> 0..dst` subject to
//! compatibility constraints of two kinds:
//!
//! - binary: `f(s(x, y)) = t(f(x), f(y))` for a pair of tables `(s, t)`,
//! - unary: `f(u(x)) = v(f(x))` for a pair of self-maps `(u, v)`,
//!
//! plus fixed points, per-element candidate sets, injectivity and
//! surjectivity. Every assignment is propagated through the constraints
//! before the next branch, so maps that are determined by a few generator
//! values are found without visiting the rest of the search space.
//!
//! Homomorphisms of hemirings, endomorphisms of semilattices, semimodule
//! homomorphisms and isomorphisms are all instances of this one engine.

use alloc::vec::Vec;

use crate::error::{guard, Result};
use crate::table::{Element, OpTable};

const UNSET: usize = usize::MAX;

/// Builder and driver for a constrained map enumeration.
#[derive(Clone, Debug)]
pub struct MapSearch<'a> {
    src_order: usize,
    dst_order: usize,
    binary: Vec<(&'a OpTable, &'a OpTable)>,
    unary: Vec<(Vec<Element>, Vec<Element>)>,
    fixed: Vec<(Element, Element)>,
    allowed: Option<Vec<Vec<bool>>>,
    injective: bool,
    surjective: bool,
}

struct State {
    assign: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<Element>,
    queue: Vec<Element>,
}

impl<'a> MapSearch<'a> {
    /// Unconstrained search over all maps `0..src -> 0..dst`.
    pub fn new(src_order: usize, dst_order: usize) -> Self {
        MapSearch {
            src_order,
            dst_order,
            binary: Vec::new(),
            unary: Vec::new(),
            fixed: Vec::new(),
            allowed: None,
            injective: false,
            surjective: false,
        }
    }

    /// Requires `f(src(x, y)) = dst(f(x), f(y))`.
    pub fn preserve(mut self, src: &'a OpTable, dst: &'a OpTable) -> Self {
        debug_assert_eq!(src.order(), self.src_order);
        debug_assert_eq!(dst.order(), self.dst_order);
        self.binary.push((src, dst));
        self
    }

    /// Requires `f(src[x]) = dst[f(x)]`.
    pub fn commute(mut self, src: Vec<Element>, dst: Vec<Element>) -> Self {
        debug_assert_eq!(src.len(), self.src_order);
        debug_assert_eq!(dst.len(), self.dst_order);
        self.unary.push((src, dst));
        self
    }

    /// Requires `f(x) = v`.
    pub fn fix(mut self, x: Element, v: Element) -> Self {
        self.fixed.push((x, v));
        self
    }

    /// Restricts the image of `x` to `values`.
    pub fn restrict(mut self, x: Element, values: impl IntoIterator<Item = Element>) -> Self {
        let (src, dst) = (self.src_order, self.dst_order);
        let allowed = self
            .allowed
            .get_or_insert_with(|| alloc::vec![alloc::vec![true; dst]; src]);
        let mut row = alloc::vec![false; dst];
        for v in values {
            row[v] = true;
        }
        for (slot, ok) in allowed[x].iter_mut().zip(row) {
            *slot &= ok;
        }
        self
    }

    /// Only injective maps.
    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    /// Only surjective maps.
    pub fn surjective(mut self) -> Self {
        self.surjective = true;
        self
    }

    /// Calls `visit` on every solution in lexicographic order of the
    /// branching choices. `visit` returns `false` to stop; the return value
    /// reports whether the search ran to completion.
    pub fn for_each(&self, mut visit: impl FnMut(&[Element]) -> bool) -> bool {
        if self.injective && self.src_order > self.dst_order {
            return true;
        }
        if self.surjective && self.dst_order > self.src_order {
            return true;
        }
        let mut st = State {
            assign: alloc::vec![UNSET; self.src_order],
            used: alloc::vec![false; self.dst_order],
            trail: Vec::with_capacity(self.src_order),
            queue: Vec::new(),
        };
        for &(x, v) in &self.fixed {
            if !self.set(&mut st, x, v) {
                return true;
            }
        }
        if !self.propagate(&mut st) {
            return true;
        }
        self.descend(&mut st, &mut visit)
    }

    /// All solutions; fails when more than `limit` exist.
    pub fn collect(&self, limit: usize) -> Result<Vec<Vec<Element>>> {
        let mut out = Vec::new();
        let complete = self.for_each(|m| {
            out.push(m.to_vec());
            out.len() <= limit
        });
        if !complete {
            guard("map search solutions", out.len(), limit)?;
        }
        Ok(out)
    }

    /// The first solution, if any.
    pub fn first(&self) -> Option<Vec<Element>> {
        let mut found = None;
        self.for_each(|m| {
            found = Some(m.to_vec());
            false
        });
        found
    }

    /// Number of solutions.
    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            true
        });
        n
    }

    fn descend(&self, st: &mut State, visit: &mut impl FnMut(&[Element]) -> bool) -> bool {
        let Some(x) = st.assign.iter().position(|&v| v == UNSET) else {
            if self.surjective && !self.is_onto(&st.assign) {
                return true;
            }
            return visit(&st.assign);
        };
        for v in 0..self.dst_order {
            let mark = st.trail.len();
            let ok = self.set(st, x, v) && self.propagate(st);
            if ok && !self.descend(st, visit) {
                self.undo(st, mark);
                return false;
            }
            self.undo(st, mark);
        }
        true
    }

    fn is_onto(&self, map: &[Element]) -> bool {
        let mut hit = alloc::vec![false; self.dst_order];
        for &v in map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    fn set(&self, st: &mut State, x: Element, v: Element) -> bool {
        match st.assign[x] {
            UNSET => {
                if let Some(allowed) = &self.allowed {
                    if !allowed[x][v] {
                        return false;
                    }
                }
                if self.injective {
                    if st.used[v] {
                        return false;
                    }
                    st.used[v] = true;
                }
                st.assign[x] = v;
                st.trail.push(x);
                st.queue.push(x);
                true
            }
            cur => cur == v,
        }
    }

    fn undo(&self, st: &mut State, mark: usize) {
        st.queue.clear();
        while st.trail.len() > mark {
            let x = st.trail.pop().expect("trail above mark");
            if self.injective {
                st.used[st.assign[x]] = false;
            }
            st.assign[x] = UNSET;
        }
    }

    fn propagate(&self, st: &mut State) -> bool {
        while let Some(x) = st.queue.pop() {
            let fx = st.assign[x];
            for &(s, t) in &self.binary {
                let mut i = 0;
                while i < st.trail.len() {
                    let y = st.trail[i];
                    let fy = st.assign[y];
                    if !self.set(st, s.get(x, y), t.get(fx, fy))
                        || !self.set(st, s.get(y, x), t.get(fy, fx))
                    {
                        st.queue.clear();
                        return false;
                    }
                    i += 1;
                }
            }
            for (u, w) in &self.unary {
                if !self.set(st, u[x], w[fx]) {
                    st.queue.clear();
                    return false;
                }
            }
        }
        true
    }
}
