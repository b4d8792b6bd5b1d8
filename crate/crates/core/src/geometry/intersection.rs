use std::collections::HashMap;

use super::arrangement::{Arrangement, Point};
use crate::arith::OrderedField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoint<F> {
    pub point: Point<F>,
    /// 0-based line positions through the point, ascending.
    pub lines: Vec<usize>,
}

impl<F> IntersectionPoint<F> {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

#[derive(Debug, Clone)]
pub struct IntersectionData<F> {
    pub points: Vec<IntersectionPoint<F>>,
    /// Lines grouped by direction (singleton classes included), each class
    /// ascending, classes ordered by their first line.
    pub parallel_classes: Vec<Vec<usize>>,
    /// `pair_point[i][j]`: index of the point where lines `i` and `j` meet.
    pair_point: Vec<Vec<Option<usize>>>,
}

impl<F: OrderedField> IntersectionData<F> {
    pub fn compute(arr: &Arrangement<F>) -> Self {
        let lines = arr.lines();
        let n = lines.len();
        let mut index: HashMap<Point<F>, usize> = HashMap::new();
        let mut points: Vec<IntersectionPoint<F>> = Vec::new();
        let mut pair_point = vec![vec![None; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let Some(p) = lines[i].meet(&lines[j]) else { continue };
                let id = *index.entry(p.clone()).or_insert_with(|| {
                    points.push(IntersectionPoint { point: p, lines: Vec::new() });
                    points.len() - 1
                });
                for k in [i, j] {
                    if !points[id].lines.contains(&k) {
                        points[id].lines.push(k);
                    }
                }
                pair_point[i][j] = Some(id);
                pair_point[j][i] = Some(id);
            }
        }
        for p in &mut points {
            p.lines.sort_unstable();
        }

        let mut parallel_classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            match parallel_classes.iter_mut().find(|cl| lines[cl[0]].is_parallel(&lines[i])) {
                Some(cl) => cl.push(i),
                None => parallel_classes.push(vec![i]),
            }
        }
        IntersectionData { points, parallel_classes, pair_point }
    }
}

impl<F> IntersectionData<F> {
    pub fn num_lines(&self) -> usize {
        self.pair_point.len()
    }

    pub fn meet_point(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_point[i][j]
    }

    /// `Σ_p (m_p − 1)`, the second Betti number of the complement.
    pub fn b2(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity() - 1).sum()
    }

    /// Number of points of each multiplicity, ascending by multiplicity.
    pub fn multiplicity_histogram(&self) -> Vec<(usize, usize)> {
        let mut h: Vec<(usize, usize)> = Vec::new();
        for p in &self.points {
            match h.iter_mut().find(|(m, _)| *m == p.multiplicity()) {
                Some(e) => e.1 += 1,
                None => h.push((p.multiplicity(), 1)),
            }
        }
        h.sort_unstable();
        h
    }

    /// Checks `Σ_p C(m_p, 2) + Σ_classes C(size, 2) = C(n, 2)`.
    pub fn pair_count_consistent(&self) -> bool {
        let c2 = |k: usize| k * k.saturating_sub(1) / 2;
        let lhs: usize = self.points.iter().map(|p| c2(p.multiplicity())).sum::<usize>()
            + self.parallel_classes.iter().map(|c| c2(c.len())).sum::<usize>();
        lhs == c2(self.num_lines())
    }

    /// Expected chamber count `1 + n + Σ_p (m_p − 1)`.
    pub fn chamber_count(&self) -> usize {
        1 + self.num_lines() + self.b2()
    }

    /// Points on each line, unordered.
    pub fn points_on_lines(&self) -> Vec<Vec<usize>> {
        let mut on = vec![Vec::new(); self.num_lines()];
        for (id, p) in self.points.iter().enumerate() {
            for &l in &p.lines {
                on[l].push(id);
            }
        }
        on
    }
}

/// Convenience wrapper.
pub fn intersection_data<F: OrderedField>(arr: &Arrangement<F>) -> IntersectionData<F> {
    IntersectionData::compute(arr)
}
