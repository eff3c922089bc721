//! Line-oriented text formats. Writers start every artifact with the
//! version line and a kind comment; parsers strip '#' comments and blank
//! lines, tolerate a missing version line, and name the line of the first
//! problem they hit.

use crate::error::{input_err, Error, Result};
use crate::geometry::{ContactLSystem, RationalPoint, Segment};
use crate::graph::Graph;
use crate::lsystem::{LShape, LinearLSystem, Ray, RayDirection, RaySystem};
use crate::order::VertexOrder;
use crate::rational::{format_q, parse_q, Q};
use crate::reduction::CircularArcRepresentation;
use crate::rep::{IntervalRepresentation, MptRepresentation, PointedInterval};

pub const FORMAT_LINE: &str = "mptkit-format 1";

/// Numbered content lines with comments, blanks, and the leading version
/// line removed. A version line with any other number is rejected.
fn content_lines(text: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if !line.is_empty() {
            out.push((i + 1, line));
        }
    }
    if let Some(&(ln, first)) = out.first() {
        if let Some(rest) = first.strip_prefix("mptkit-format") {
            if rest.trim() != "1" {
                return input_err(format!("line {ln}: unsupported version '{first}'"));
            }
            out.remove(0);
        }
    }
    Ok(out)
}

fn split_exact<const K: usize>(ln: usize, line: &str) -> Result<[&str; K]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != K {
        return input_err(format!(
            "line {ln}: expected {K} fields, got {}",
            parts.len()
        ));
    }
    Ok(std::array::from_fn(|i| parts[i]))
}

fn index_at(ln: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Input(format!("line {ln}: '{s}' is not a vertex count or id")))
}

fn q_at(ln: usize, s: &str) -> Result<Q> {
    parse_q(s).map_err(|e| Error::Input(format!("line {ln}: {e}")))
}

/// Splits off the first content line as an item-count header and checks
/// the remaining line count against it.
fn counted_body<'a>(
    lines: &'a [(usize, &'a str)],
    what: &str,
) -> Result<(usize, &'a [(usize, &'a str)])> {
    let Some(&(ln, head)) = lines.first() else {
        return input_err(format!("empty {what} file"));
    };
    let [n] = split_exact::<1>(ln, head)?;
    let n = index_at(ln, n)?;
    let body = &lines[1..];
    if body.len() != n {
        return input_err(format!(
            "line {ln}: header promises {n} items, file has {}",
            body.len()
        ));
    }
    Ok((n, body))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: graph\n{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = content_lines(text)?;
    let Some(&(ln, head)) = lines.first() else {
        return input_err("empty graph file");
    };
    let [n, m] = split_exact::<2>(ln, head)?;
    let (n, m) = (index_at(ln, n)?, index_at(ln, m)?);
    let body = &lines[1..];
    if body.len() != m {
        return input_err(format!(
            "line {ln}: header promises {m} edges, file has {}",
            body.len()
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for &(ln, line) in body {
        let [u, v] = split_exact::<2>(ln, line)?;
        edges.push((index_at(ln, u)?, index_at(ln, v)?));
    }
    Graph::new(n, &edges)
}

pub fn write_mpt_rep(rep: &MptRepresentation) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: mpt-rep\n{}\n", rep.n());
    for item in rep.items() {
        s.push_str(&format!(
            "{} {} {}\n",
            format_q(item.s()),
            format_q(item.p()),
            format_q(item.e())
        ));
    }
    s
}

pub fn parse_mpt_rep(text: &str) -> Result<MptRepresentation> {
    let lines = content_lines(text)?;
    let (_, body) = counted_body(&lines, "representation")?;
    let mut items = Vec::with_capacity(body.len());
    for &(ln, line) in body {
        let [s, p, e] = split_exact::<3>(ln, line)?;
        items.push(PointedInterval::new(q_at(ln, s)?, q_at(ln, p)?, q_at(ln, e)?)?);
    }
    Ok(MptRepresentation::new(items))
}

pub fn write_interval_rep(rep: &IntervalRepresentation) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: interval-rep\n{}\n", rep.n());
    for (start, end) in rep.items() {
        s.push_str(&format!("{} {}\n", format_q(start), format_q(end)));
    }
    s
}

pub fn parse_interval_rep(text: &str) -> Result<IntervalRepresentation> {
    let lines = content_lines(text)?;
    let (_, body) = counted_body(&lines, "interval representation")?;
    let mut items = Vec::with_capacity(body.len());
    for &(ln, line) in body {
        let [s, e] = split_exact::<2>(ln, line)?;
        items.push((q_at(ln, s)?, q_at(ln, e)?));
    }
    IntervalRepresentation::new(items)
}

pub fn write_lsystem(sys: &LinearLSystem) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: lsystem\n{}\n", sys.n());
    for shape in sys.shapes() {
        s.push_str(&shape_line(shape));
    }
    s
}

fn shape_line(shape: &LShape) -> String {
    format!(
        "{} {} {}\n",
        format_q(shape.t()),
        format_q(shape.c()),
        format_q(shape.r())
    )
}

fn parse_shape(ln: usize, line: &str) -> Result<LShape> {
    let [t, c, r] = split_exact::<3>(ln, line)?;
    LShape::new(q_at(ln, t)?, q_at(ln, c)?, q_at(ln, r)?)
}

pub fn parse_lsystem(text: &str) -> Result<LinearLSystem> {
    let lines = content_lines(text)?;
    let (_, body) = counted_body(&lines, "L-system")?;
    let shapes = body
        .iter()
        .map(|&(ln, line)| parse_shape(ln, line))
        .collect::<Result<Vec<_>>>()?;
    LinearLSystem::new(shapes)
}

pub fn write_rays(rs: &RaySystem) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: rays\n{}\n", rs.n());
    for ray in rs.rays() {
        let dir = match ray.dir {
            RayDirection::Down => "down",
            RayDirection::Left => "left",
        };
        s.push_str(&format!("{dir} {} {}\n", format_q(&ray.x), format_q(&ray.y)));
    }
    s
}

pub fn parse_rays(text: &str) -> Result<RaySystem> {
    let lines = content_lines(text)?;
    let (_, body) = counted_body(&lines, "ray")?;
    let mut rays = Vec::with_capacity(body.len());
    for &(ln, line) in body {
        let [dir, x, y] = split_exact::<3>(ln, line)?;
        let dir = match dir {
            "down" => RayDirection::Down,
            "left" => RayDirection::Left,
            other => {
                return input_err(format!("line {ln}: direction '{other}' is not down or left"))
            }
        };
        rays.push(Ray { dir, x: q_at(ln, x)?, y: q_at(ln, y)? });
    }
    RaySystem::new(rays)
}

pub fn write_order(ord: &VertexOrder) -> String {
    let ids: Vec<String> = ord.as_slice().iter().map(|v| v.to_string()).collect();
    format!("{FORMAT_LINE}\n# kind: order\n{}\n", ids.join(" "))
}

pub fn parse_order(text: &str) -> Result<VertexOrder> {
    let lines = content_lines(text)?;
    match lines.as_slice() {
        [] => VertexOrder::new(Vec::new()),
        [(ln, line)] => {
            let seq = line
                .split_whitespace()
                .map(|s| index_at(*ln, s))
                .collect::<Result<Vec<_>>>()?;
            VertexOrder::new(seq)
        }
        [_, (ln, _), ..] => input_err(format!("line {ln}: an order file holds a single line")),
    }
}

pub fn write_weights(weights: &[Q]) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: weights\n");
    for (v, w) in weights.iter().enumerate() {
        s.push_str(&format!("{v} {}\n", format_q(w)));
    }
    s
}

/// Weight lines "vertex weight" in any order, each vertex of 0..n exactly
/// once, returned dense.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<Q>> {
    let lines = content_lines(text)?;
    let mut weights: Vec<Option<Q>> = vec![None; n];
    for &(ln, line) in &lines {
        let [v, w] = split_exact::<2>(ln, line)?;
        let v = index_at(ln, v)?;
        if v >= n {
            return input_err(format!("line {ln}: vertex {v} out of range for n = {n}"));
        }
        if weights[v].replace(q_at(ln, w)?).is_some() {
            return input_err(format!("line {ln}: vertex {v} weighted twice"));
        }
    }
    weights
        .into_iter()
        .enumerate()
        .map(|(v, w)| w.ok_or_else(|| Error::Input(format!("vertex {v} has no weight"))))
        .collect()
}

pub fn write_arcs(arcs: &CircularArcRepresentation) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: arcs\n{}\n", arcs.n());
    for (start, end) in arcs.arcs() {
        s.push_str(&format!("{} {}\n", format_q(start), format_q(end)));
    }
    s
}

pub fn parse_arcs(text: &str) -> Result<CircularArcRepresentation> {
    let lines = content_lines(text)?;
    let (_, body) = counted_body(&lines, "circular-arc")?;
    let mut arcs = Vec::with_capacity(body.len());
    for &(ln, line) in body {
        let [s, e] = split_exact::<2>(ln, line)?;
        arcs.push((q_at(ln, s)?, q_at(ln, e)?));
    }
    CircularArcRepresentation::new(arcs)
}

pub fn write_segments(segs: &[Segment]) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: segments\n");
    for seg in segs {
        s.push_str(&format!(
            "{} {} {} {}\n",
            format_q(&seg.a().x),
            format_q(&seg.a().y),
            format_q(&seg.b().x),
            format_q(&seg.b().y)
        ));
    }
    s
}

pub fn parse_segments(text: &str) -> Result<Vec<Segment>> {
    let lines = content_lines(text)?;
    let mut segs = Vec::with_capacity(lines.len());
    for &(ln, line) in &lines {
        let [ax, ay, bx, by] = split_exact::<4>(ln, line)?;
        let a = RationalPoint::new(q_at(ln, ax)?, q_at(ln, ay)?);
        let b = RationalPoint::new(q_at(ln, bx)?, q_at(ln, by)?);
        segs.push(if a == b { Segment::point(a) } else { Segment::new(a, b)? });
    }
    Ok(segs)
}

pub fn write_contact(sys: &ContactLSystem) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: contact-lsystem\n{}\n", sys.n());
    for shape in sys.shapes() {
        s.push_str(&shape_line(shape));
    }
    s.push_str("contacts\n");
    for (u, v, at) in sys.contacts() {
        s.push_str(&format!(
            "{u} {v} {} {}\n",
            format_q(&at.x),
            format_q(&at.y)
        ));
    }
    s
}

pub fn parse_contact(text: &str) -> Result<ContactLSystem> {
    let lines = content_lines(text)?;
    let Some(&(ln, head)) = lines.first() else {
        return input_err("empty contact-system file");
    };
    let [n] = split_exact::<1>(ln, head)?;
    let n = index_at(ln, n)?;
    if lines.len() < n + 2 || lines[n + 1].1 != "contacts" {
        return input_err(format!(
            "line {ln}: expected {n} shapes followed by a 'contacts' line"
        ));
    }
    let shapes = lines[1..=n]
        .iter()
        .map(|&(ln, line)| parse_shape(ln, line))
        .collect::<Result<Vec<_>>>()?;
    let mut contacts = Vec::new();
    for &(ln, line) in &lines[n + 2..] {
        let [u, v, x, y] = split_exact::<4>(ln, line)?;
        contacts.push((
            index_at(ln, u)?,
            index_at(ln, v)?,
            RationalPoint::new(q_at(ln, x)?, q_at(ln, y)?),
        ));
    }
    ContactLSystem::new(LinearLSystem::new(shapes)?, contacts)
}

/// One "orig front back" line per split vertex of a coloring reduction.
pub fn write_mapping(split_map: &[(usize, usize, usize)]) -> String {
    let mut s = format!("{FORMAT_LINE}\n# kind: mapping\n");
    for &(orig, front, back) in split_map {
        s.push_str(&format!("{orig} {front} {back}\n"));
    }
    s
}

pub fn parse_mapping(text: &str) -> Result<Vec<(usize, usize, usize)>> {
    let lines = content_lines(text)?;
    let mut map = Vec::with_capacity(lines.len());
    for &(ln, line) in &lines {
        let [orig, front, back] = split_exact::<3>(ln, line)?;
        map.push((index_at(ln, orig)?, index_at(ln, front)?, index_at(ln, back)?));
    }
    Ok(map)
}
