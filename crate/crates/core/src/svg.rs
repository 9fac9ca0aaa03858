//! Hand-written SVG for region plots and Betti diagrams.
//!
//! Coordinates are computed exactly and converted to floating point only
//! when written, always with two decimals, so output is byte-stable.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::koszul;
use crate::qfield::QuadNum;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 56.0;

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn header(out: &mut String, width: f64, height: f64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect x="0.00" y="0.00" width="{}" height="{}" fill="white"/>"#,
        num(width),
        num(height)
    )
    .unwrap();
}

/// A point of the plane in charge coordinates.
enum Exact {
    Rational(BigRational, BigRational),
    Quadratic(QuadNum, QuadNum),
}

impl Exact {
    fn to_f64(&self) -> (f64, f64) {
        match self {
            Exact::Rational(p, q) => (p.to_f64().unwrap(), q.to_f64().unwrap()),
            Exact::Quadratic(p, q) => (p.approx_f64(), q.approx_f64()),
        }
    }
}

struct Frame {
    p_max: f64,
    q_max: f64,
}

impl Frame {
    fn x(&self, p: f64) -> f64 {
        MARGIN + p / self.p_max * (SIZE - 2.0 * MARGIN)
    }

    fn y(&self, q: f64) -> f64 {
        SIZE - MARGIN - q / self.q_max * (SIZE - 2.0 * MARGIN)
    }

    fn point(&self, e: &Exact) -> (f64, f64) {
        let (p, q) = e.to_f64();
        (self.x(p), self.y(q))
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Scatter plot of Koszul charges between the lines `q = np` and
/// `μ(pn − q(n−1)) + q = 0`, clipped to `[0, p_max] × [0, q_max]`.
pub fn region_svg(n: i64, p_max: i64, q_max: i64, points: &[(i64, i64)]) -> Result<String> {
    if p_max < 1 || q_max < 1 {
        return Err(Error::InvalidInput("plot bounds must be at least 1".into()));
    }
    let frame = Frame {
        p_max: p_max as f64,
        q_max: q_max as f64,
    };
    // upper line q = n p
    let upper_on_right = n * p_max <= q_max;
    let upper = if upper_on_right {
        Exact::Rational(rat(p_max), rat(n * p_max))
    } else {
        Exact::Rational(BigRational::new(q_max.into(), n.into()), rat(q_max))
    };
    // lower line q = slope p
    let slope = koszul::koszul_boundary_slope(n)?;
    let disc = slope.discriminant().clone();
    let q_top = QuadNum::integer(q_max, disc.clone());
    let at_right = slope.scale_int(&BigInt::from(p_max));
    let lower_on_right = at_right.cmp_value(&q_top)? != Ordering::Greater;
    let lower = if lower_on_right {
        Exact::Quadratic(QuadNum::integer(p_max, disc), at_right)
    } else {
        Exact::Quadratic(q_top.div(&slope)?, q_top.clone())
    };

    let mut out = String::new();
    header(&mut out, SIZE, SIZE);
    let origin = (frame.x(0.0), frame.y(0.0));
    let corner = (frame.x(frame.p_max), frame.y(frame.q_max));
    let (u, l) = (frame.point(&upper), frame.point(&lower));
    let mut poly = vec![origin, u];
    if !upper_on_right && lower_on_right {
        poly.push(corner);
    }
    poly.push(l);
    let poly: Vec<String> = poly.iter().map(|(x, y)| format!("{},{}", num(*x), num(*y))).collect();
    writeln!(
        out,
        r##"<polygon class="region" points="{}" fill="#dbe8f6" stroke="none"/>"##,
        poly.join(" ")
    )
    .unwrap();
    writeln!(
        out,
        r#"<path class="axes" d="M {} {} L {} {} M {} {} L {} {}" stroke="black" fill="none"/>"#,
        num(origin.0),
        num(origin.1),
        num(corner.0),
        num(origin.1),
        num(origin.0),
        num(origin.1),
        num(origin.0),
        num(corner.1)
    )
    .unwrap();
    for (class, end, color) in [("line-np", u, "#b03030"), ("line-mu", l, "#3050b0")] {
        writeln!(
            out,
            r#"<path class="{class}" d="M {} {} L {} {}" stroke="{color}" stroke-width="1.50" fill="none"/>"#,
            num(origin.0),
            num(origin.1),
            num(end.0),
            num(end.1)
        )
        .unwrap();
    }
    for (p, q) in points {
        writeln!(
            out,
            r#"<circle class="charge" cx="{}" cy="{}" r="2.50" fill="black"/>"#,
            num(frame.x(*p as f64)),
            num(frame.y(*q as f64))
        )
        .unwrap();
    }
    let label = |out: &mut String, x: f64, y: f64, anchor: &str, text: &str| {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14.00" text-anchor="{anchor}">{text}</text>"#,
            num(x),
            num(y)
        )
        .unwrap();
    };
    label(&mut out, SIZE / 2.0, MARGIN / 2.0, "middle", &format!("Koszul charges, n = {n}"));
    label(&mut out, corner.0, origin.1 + 24.0, "end", &format!("p = {p_max}"));
    label(&mut out, origin.0 - 8.0, corner.1 + 4.0, "end", &format!("q = {q_max}"));
    label(&mut out, corner.0 + 4.0, origin.1 + 4.0, "start", "p");
    label(&mut out, origin.0, corner.1 - 10.0, "middle", "q");
    out.push_str("</svg>\n");
    Ok(out)
}

/// Betti diagram as an SVG grid: column `i`, row `k`, cell `β_{i,i+k}`.
pub fn table_svg(title: &str, table: &BettiTable) -> String {
    const CELL: f64 = 44.0;
    let (i_lo, i_hi) = table.i_range().unwrap_or((0, -1));
    let ks: Vec<i64> = table.entries().map(|(i, j, _)| j - i).collect();
    let (k_lo, k_hi) = (
        ks.iter().copied().min().unwrap_or(0),
        ks.iter().copied().max().unwrap_or(-1),
    );
    let cols = (i_hi - i_lo + 1).max(0) as f64;
    let rows = (k_hi - k_lo + 1).max(0) as f64;
    let width = (cols + 1.0) * CELL + 2.0 * 16.0;
    let height = (rows + 1.0) * CELL + 2.0 * 16.0 + 24.0;
    let mut out = String::new();
    header(&mut out, width, height);
    let text = |out: &mut String, x: f64, y: f64, weight: &str, s: &str| {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="13.00" font-weight="{weight}" text-anchor="middle">{s}</text>"#,
            num(x),
            num(y)
        )
        .unwrap();
    };
    text(&mut out, width / 2.0, 24.0, "bold", title);
    let x0 = 16.0;
    let y0 = 40.0;
    for (c, i) in (i_lo..=i_hi).enumerate() {
        let x = x0 + (c as f64 + 1.5) * CELL;
        text(&mut out, x, y0 + CELL * 0.6, "bold", &i.to_string());
    }
    for (r, k) in (k_lo..=k_hi).enumerate() {
        let y = y0 + (r as f64 + 1.0) * CELL;
        text(&mut out, x0 + CELL * 0.5, y + CELL * 0.6, "bold", &format!("{k}:"));
        for (c, i) in (i_lo..=i_hi).enumerate() {
            let x = x0 + (c as f64 + 1.0) * CELL;
            let v = table.get(i, i + k);
            writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#999999"/>"##,
                num(x),
                num(y),
                num(CELL),
                num(CELL)
            )
            .unwrap();
            let s = if v == BigInt::ZERO { ".".to_string() } else { v.to_string() };
            text(&mut out, x + CELL / 2.0, y + CELL * 0.6, "normal", &s);
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_table, ModuleDescriptor, Window};

    #[test]
    fn number_format() {
        assert_eq!(num(1.0), "1.00");
        assert_eq!(num(-0.001), "0.00");
        assert_eq!(num(2.345), "2.35");
    }

    #[test]
    fn region_plot_structure() {
        let pts = koszul::koszul_region(5, 40, 40).unwrap();
        let svg = region_svg(5, 40, 40, &pts).unwrap();
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640.00 640.00\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), pts.len());
        assert_eq!(svg.matches("class=\"line-np\"").count(), 1);
        assert_eq!(svg.matches("class=\"line-mu\"").count(), 1);
        assert_eq!(svg, region_svg(5, 40, 40, &pts).unwrap());
        assert!(region_svg(5, 0, 4, &[]).is_err());
    }

    #[test]
    fn lines_end_on_the_frame() {
        // q = 5p leaves through the top edge at p = 8; the lower line has
        // slope below 5 so it ends at p = 8 or later.
        let svg = region_svg(5, 40, 40, &[]).unwrap();
        let np = svg.lines().find(|l| l.contains("line-np")).unwrap();
        let frame = Frame { p_max: 40.0, q_max: 40.0 };
        let expect = format!("L {} {}", num(frame.x(8.0)), num(frame.y(40.0)));
        assert!(np.contains(&expect), "{np}");
    }

    #[test]
    fn table_plot() {
        let d = ModuleDescriptor::generic(5, 1, 4).unwrap();
        let t = betti_table(&d, Window::new(0, 3));
        let svg = table_svg("n=5 (1,4)", &t);
        assert!(svg.contains(">76</text>"));
        assert_eq!(svg.matches("<rect").count(), 1 + 4);
    }
}
