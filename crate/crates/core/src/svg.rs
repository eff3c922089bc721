//! Deterministic SVG rendering for the geometric systems.
//!
//! Screen convention: the y axis points down, so every math coordinate is
//! drawn with y negated. Numbers are printed with three decimals, making
//! the output byte-identical across runs for identical input and options.

use crate::geometry::{ContactLSystem, CyclicSegmentSystem, RationalPoint, Segment};
use crate::lsystem::LinearLSystem;
use crate::rational::q_to_f64;
use crate::rep::MptRepresentation;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Pixels per math unit.
    pub scale: f64,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { scale: 40.0, labels: true }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Scene<'a> {
    Rep(&'a MptRepresentation),
    LSystem(&'a LinearLSystem),
    Segments(&'a CyclicSegmentSystem),
    SegmentList(&'a [Segment]),
    Contact(&'a ContactLSystem),
}

struct Canvas {
    polylines: Vec<Vec<(f64, f64)>>,
    markers: Vec<(f64, f64)>,
    labels: Vec<(f64, f64, String)>,
    parabola: bool,
}

impl Canvas {
    fn new(parabola: bool) -> Self {
        Canvas { polylines: Vec::new(), markers: Vec::new(), labels: Vec::new(), parabola }
    }

    fn data_points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.polylines
            .iter()
            .flatten()
            .copied()
            .chain(self.markers.iter().copied())
            .chain(self.labels.iter().map(|(x, y, _)| (*x, *y)))
    }
}

fn f(p: &RationalPoint) -> (f64, f64) {
    (q_to_f64(&p.x), q_to_f64(&p.y))
}

fn shape_canvas(sys: &LinearLSystem, labels: bool) -> Canvas {
    let mut c = Canvas::new(false);
    for (i, s) in sys.shapes().iter().enumerate() {
        let t = q_to_f64(s.t());
        let corner = q_to_f64(s.c());
        let r = q_to_f64(s.r());
        c.polylines.push(vec![(corner, -t), (corner, -corner), (r, -corner)]);
        if labels {
            c.labels.push((corner, -corner, format!("v{i}")));
        }
    }
    c
}

fn build_canvas(scene: &Scene<'_>, opts: &RenderOptions) -> Canvas {
    match scene {
        Scene::LSystem(sys) => shape_canvas(sys, opts.labels),
        Scene::Contact(sys) => {
            let mut c = shape_canvas(sys.system(), opts.labels);
            for (_, _, p) in sys.contacts() {
                c.markers.push(f(p));
            }
            c
        }
        Scene::Rep(rep) => {
            let mut c = Canvas::new(false);
            for (i, it) in rep.items().iter().enumerate() {
                let s = q_to_f64(it.s());
                let p = q_to_f64(it.p());
                let e = q_to_f64(it.e());
                c.polylines.push(vec![(p, -s), (p, -p), (e, -p)]);
                if opts.labels {
                    c.labels.push((p, -p, format!("v{i}")));
                }
            }
            c
        }
        Scene::Segments(sys) => {
            let mut c = Canvas::new(true);
            for (i, seg) in sys.segments().iter().enumerate() {
                if seg.is_degenerate() {
                    c.markers.push(f(seg.a()));
                } else {
                    c.polylines.push(vec![f(seg.a()), f(seg.b())]);
                }
                if opts.labels {
                    let tp = &sys.tangency_points()[i];
                    c.labels.push((q_to_f64(&tp.x), q_to_f64(&tp.y), format!("v{i}")));
                }
            }
            c
        }
        Scene::SegmentList(segs) => {
            let mut c = Canvas::new(true);
            for (i, seg) in segs.iter().enumerate() {
                if seg.is_degenerate() {
                    c.markers.push(f(seg.a()));
                } else {
                    c.polylines.push(vec![f(seg.a()), f(seg.b())]);
                }
                if opts.labels {
                    c.labels.push((f(seg.a()).0, f(seg.a()).1, format!("v{i}")));
                }
            }
            c
        }
    }
}

fn fmt(v: f64) -> String {
    // Avoid "-0.000" so equal coordinates always print identically.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.3}")
}

pub fn render_svg(scene: &Scene<'_>, opts: &RenderOptions) -> String {
    let canvas = build_canvas(scene, opts);

    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (x, y) in canvas.data_points() {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    if lo.0 > hi.0 {
        lo = (0.0, 0.0);
        hi = (1.0, 1.0);
    }

    // Reference curve spanning the data: the corner line y = -x, or the
    // parabola y = x^2 sampled as a polyline for segment scenes.
    let reference: Vec<(f64, f64)> = if canvas.parabola {
        let (a, b) = (lo.0.floor() - 1.0, hi.0.ceil() + 1.0);
        let steps = ((b - a) * 4.0) as usize;
        (0..=steps)
            .map(|i| {
                let x = a + i as f64 * 0.25;
                (x, x * x)
            })
            .collect()
    } else {
        let a = lo.0.min(-hi.1) - 1.0;
        let b = hi.0.max(-lo.1) + 1.0;
        vec![(a, -a), (b, -b)]
    };
    for (x, y) in &reference {
        lo = (lo.0.min(*x), lo.1.min(*y));
        hi = (hi.0.max(*x), hi.1.max(*y));
    }

    let s = opts.scale;
    let to_screen = |(x, y): (f64, f64)| (x * s, -y * s);
    let margin = 0.5 * s;
    let (x0, y0) = (lo.0 * s - margin, -hi.1 * s - margin);
    let width = (hi.0 - lo.0) * s + 2.0 * margin;
    let height = (hi.1 - lo.1) * s + 2.0 * margin;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<!-- screen coordinates: the y axis points down, math y is negated -->\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt(x0),
        fmt(y0),
        fmt(width),
        fmt(height)
    ));

    let points_attr = |pts: &[(f64, f64)]| {
        pts.iter()
            .map(|&p| {
                let (x, y) = to_screen(p);
                format!("{},{}", fmt(x), fmt(y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    out.push_str(&format!(
        "  <polyline class=\"reference\" points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n",
        points_attr(&reference)
    ));
    for pts in &canvas.polylines {
        out.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
            points_attr(pts)
        ));
    }
    for &m in &canvas.markers {
        let (x, y) = to_screen(m);
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#cc3333\"/>\n",
            fmt(x),
            fmt(y)
        ));
    }
    for (x, y, text) in &canvas.labels {
        let (sx, sy) = to_screen((*x, *y));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"11\" fill=\"#3355bb\">{}</text>\n",
            fmt(sx + 4.0),
            fmt(sy + 12.0),
            text
        ));
    }
    out.push_str("</svg>\n");
    out
}
