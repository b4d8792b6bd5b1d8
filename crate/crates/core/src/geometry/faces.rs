//! Stratification of the real plane by an arrangement into vertices, edges
//! and chambers, each identified by its sign vector.

use std::cmp::Ordering;
use std::collections::HashMap;


use super::arrangement::{Arrangement, Point};
use super::intersection::IntersectionData;
use crate::arith::{OrderedField, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face<F> {
    pub sign_vector: Vec<Sign>,
    pub dim: u8,
    pub sample_point: Point<F>,
}

/// One step of the cyclic order around a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RotationItem {
    Edge(usize),
    Chamber(usize),
}

#[derive(Debug, Clone)]
pub struct EdgeInfo {
    /// 0-based supporting line.
    pub line: usize,
    /// Endpoints in the order of the line's direction `(−b, a)`; `None` for
    /// an unbounded end.
    pub ends: [Option<usize>; 2],
    /// Adjacent chambers on the negative and positive side of the line.
    pub chambers: [usize; 2],
}

#[derive(Debug, Clone)]
pub struct FacePoset<F> {
    pub chambers: Vec<Face<F>>,
    pub edges: Vec<Face<F>>,
    pub vertices: Vec<Face<F>>,
    pub edge_info: Vec<EdgeInfo>,
    /// Per vertex: 0-based lines through it, ascending.
    pub vertex_lines: Vec<Vec<usize>>,
    rotation: Vec<Vec<RotationItem>>,
    num_lines: usize,
}

fn angle_half<F: OrderedField>(v: &(F, F)) -> u8 {
    match (v.1.sign(), v.0.sign()) {
        (Sign::Pos, _) | (Sign::Zero, Sign::Pos) => 0,
        _ => 1,
    }
}

/// Counter-clockwise angular order of nonzero vectors, starting at angle 0.
fn angle_cmp<F: OrderedField>(u: &(F, F), v: &(F, F)) -> Ordering {
    angle_half(u).cmp(&angle_half(v)).then_with(|| {
        let cross = u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone();
        cross.sign().flip().to_ordering()
    })
}

impl<F: OrderedField> FacePoset<F> {
    pub fn compute(arr: &Arrangement<F>, data: &IntersectionData<F>) -> Result<Self> {
        let lines = arr.lines();
        let n = lines.len();

        let vertices: Vec<Face<F>> = data
            .points
            .iter()
            .map(|p| Face { sign_vector: arr.sign_vector(&p.point), dim: 0, sample_point: p.point.clone() })
            .collect();
        let vertex_lines: Vec<Vec<usize>> = data.points.iter().map(|p| p.lines.clone()).collect();

        // (vertex, line) -> (edge before, edge after) along the line direction
        let mut around: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut edges = Vec::new();
        let mut edge_line = Vec::new();
        let mut edge_ends = Vec::new();
        for (li, mut on) in data.points_on_lines().into_iter().enumerate() {
            let line = &lines[li];
            let (dx, dy) = line.direction();
            let param = |p: &Point<F>| dx.clone() * p.x.clone() + dy.clone() * p.y.clone();
            on.sort_by(|&p, &q| param(&data.points[p].point).cmp_exact(&param(&data.points[q].point)));
            let mut push = |sample: Point<F>, ends: [Option<usize>; 2]| {
                let mut sv = arr.sign_vector(&sample);
                debug_assert_eq!(sv[li], Sign::Zero);
                sv[li] = Sign::Zero;
                edges.push(Face { sign_vector: sv, dim: 1, sample_point: sample });
                edge_line.push(li);
                edge_ends.push(ends);
                edges.len() - 1
            };
            if on.is_empty() {
                push(line.base_point(), [None, None]);
                continue;
            }
            let first = &data.points[on[0]].point;
            let mut prev_edge = push(first.add(&-dx.clone(), &-dy.clone()), [None, Some(on[0])]);
            for w in on.windows(2) {
                let (p, q) = (&data.points[w[0]].point, &data.points[w[1]].point);
                let e = push(p.midpoint(q), [Some(w[0]), Some(w[1])]);
                around.insert((w[0], li), (prev_edge, e));
                prev_edge = e;
            }
            let last_id = *on.last().unwrap();
            let last = &data.points[last_id].point;
            let e = push(last.add(&dx, &dy), [Some(last_id), None]);
            around.insert((last_id, li), (prev_edge, e));
        }

        // chambers on both sides of every edge
        let mut chamber_index: HashMap<Vec<Sign>, usize> = HashMap::new();
        let mut chambers: Vec<Face<F>> = Vec::new();
        let mut edge_info = Vec::with_capacity(edges.len());
        for (e, face) in edges.iter().enumerate() {
            let li = edge_line[e];
            let mut sides = [0usize; 2];
            for (slot, side) in [Sign::Neg, Sign::Pos].into_iter().enumerate() {
                let mut sv = face.sign_vector.clone();
                sv[li] = side;
                let id = match chamber_index.get(&sv) {
                    Some(&id) => id,
                    None => {
                        let sample = chamber_witness(arr, &face.sample_point, li, side, &sv)?;
                        chambers.push(Face { sign_vector: sv.clone(), dim: 2, sample_point: sample });
                        chamber_index.insert(sv, chambers.len() - 1);
                        chambers.len() - 1
                    }
                };
                sides[slot] = id;
            }
            edge_info.push(EdgeInfo { line: li, ends: edge_ends[e], chambers: sides });
        }

        let expected_chambers = data.chamber_count();
        if chambers.len() != expected_chambers {
            return Err(Error::FaceCount(format!(
                "{} chambers found, Zaslavsky count is {expected_chambers}",
                chambers.len()
            )));
        }
        let expected_edges: usize = data.points_on_lines().iter().map(|v| v.len() + 1).sum();
        if edges.len() != expected_edges {
            return Err(Error::FaceCount(format!("{} edges, expected {expected_edges}", edges.len())));
        }

        // cyclic order around every vertex
        let mut rotation = Vec::with_capacity(vertices.len());
        for (v, through) in vertex_lines.iter().enumerate() {
            let mut rays: Vec<((F, F), usize)> = Vec::with_capacity(2 * through.len());
            for &li in through {
                let (dx, dy) = lines[li].direction();
                let (before, after) = around[&(v, li)];
                rays.push(((-dx.clone(), -dy.clone()), before));
                rays.push(((dx, dy), after));
            }
            rays.sort_by(|a, b| angle_cmp(&a.0, &b.0));
            let k = rays.len();
            let mut order = Vec::with_capacity(2 * k);
            for r in 0..k {
                let (u, e) = &rays[r];
                let (w, next_edge) = &rays[(r + 1) % k];
                let dir = (u.0.clone() + w.0.clone(), u.1.clone() + w.1.clone());
                let mut sv = vertices[v].sign_vector.clone();
                for &li in through {
                    let l = &lines[li];
                    sv[li] = (l.a.clone() * dir.0.clone() + l.b.clone() * dir.1.clone()).sign();
                }
                let c = *chamber_index
                    .get(&sv)
                    .ok_or_else(|| Error::FaceCount(format!("no chamber for sector {r} at vertex {v}")))?;
                if !edge_info[*e].chambers.contains(&c) || !edge_info[*next_edge].chambers.contains(&c) {
                    return Err(Error::FaceCount(format!("sector {r} at vertex {v} not bounded by its rays")));
                }
                order.push(RotationItem::Edge(*e));
                order.push(RotationItem::Chamber(c));
            }
            rotation.push(order);
        }

        Ok(FacePoset { chambers, edges, vertices, edge_info, vertex_lines, rotation, num_lines: n })
    }
}

impl<F> FacePoset<F> {
    pub fn num_lines(&self) -> usize {
        self.num_lines
    }

    /// Alternating edge/chamber sequence counter-clockwise around a vertex,
    /// starting with an edge. Length `4·m_p`.
    pub fn rotational_order(&self, vertex: usize) -> &[RotationItem] {
        &self.rotation[vertex]
    }

    /// Chambers around a vertex in counter-clockwise order, with the edge
    /// preceding each one: `(edge_k, chamber_k)` where chamber_k lies between
    /// edge_k and edge_{k+1}.
    pub fn sectors(&self, vertex: usize) -> Vec<(usize, usize)> {
        self.rotation[vertex]
            .chunks(2)
            .map(|pair| match pair {
                [RotationItem::Edge(e), RotationItem::Chamber(c)] => (*e, *c),
                _ => unreachable!("rotation alternates edge, chamber"),
            })
            .collect()
    }
}

/// Moves off the edge's sample point along the line's normal, halving the
/// step until the sign vector matches the requested chamber.
fn chamber_witness<F: OrderedField>(
    arr: &Arrangement<F>,
    on_edge: &Point<F>,
    line: usize,
    side: Sign,
    target: &[Sign],
) -> Result<Point<F>> {
    let l = &arr.lines()[line];
    let mut eps = if side == Sign::Pos { F::one() } else { -F::one() };
    let half = F::one() / F::from_integer(2);
    for _ in 0..200 {
        let p = on_edge.add(&(eps.clone() * l.a.clone()), &(eps.clone() * l.b.clone()));
        if arr.sign_vector(&p) == target {
            return Ok(p);
        }
        eps = eps * half.clone();
    }
    debug_assert!(!eps.is_zero());
    Err(Error::FaceCount(format!("no witness point next to an edge of line {}", line + 1)))
}

/// Face poset of an arrangement.
pub fn face_poset<F: OrderedField>(arr: &Arrangement<F>) -> Result<FacePoset<F>> {
    let data = IntersectionData::compute(arr);
    FacePoset::compute(arr, &data)
}
