//! SVG rendering of two-variable fans in the closed positive quadrant.

use std::fmt::Write;

use anyhow::{bail, Result};

use loctrop_core::algebra::Q;
use loctrop_core::tropical::TropicalVarietyResult;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 60.0;

struct Frame {
    max: f64,
}

impl Frame {
    fn x(&self, u: f64) -> f64 {
        MARGIN + u / self.max * SIZE
    }

    fn y(&self, v: f64) -> f64 {
        MARGIN + SIZE - v / self.max * SIZE
    }

    /// Where the ray through `r` leaves the viewport.
    fn clip(&self, r: &[i64]) -> (f64, f64) {
        let top = r.iter().copied().max().unwrap_or(1).max(1) as f64;
        let t = self.max / top;
        (r[0] as f64 * t, r[1] as f64 * t)
    }
}

pub fn render(t: &TropicalVarietyResult, vars: &[String]) -> Result<String> {
    if t.fan.ambient() != 2 {
        bail!("svg output needs exactly two variables, found {}", t.fan.ambient());
    }
    let fan = &t.fan;
    let max = fan.rays().iter().flatten().copied().max().unwrap_or(1).max(1) as f64;
    let frame = Frame { max };
    let total = SIZE + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total}\" height=\"{total}\" viewBox=\"0 0 {total} {total}\">"
    );
    let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{total}\" height=\"{total}\" fill=\"white\"/>");
    let (x0, y0, x1, y1) = (frame.x(0.0), frame.y(0.0), frame.x(max), frame.y(max));
    let _ = writeln!(
        s,
        "<rect x=\"{x0:.2}\" y=\"{y1:.2}\" width=\"{SIZE:.2}\" height=\"{SIZE:.2}\" fill=\"none\" stroke=\"#bbbbbb\"/>"
    );
    let _ = writeln!(s, "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>");
    let _ = writeln!(s, "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"black\"/>");
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"end\">weight of {}</text>",
        x1,
        y0 + 30.0,
        vars[0]
    );
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\">weight of {}</text>",
        x0 - 40.0,
        y1 - 15.0,
        vars[1]
    );
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{max}</text>",
        x0 - 6.0,
        y1 + 4.0
    );
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{max}</text>",
        x1,
        y0 + 16.0
    );

    for (i, c) in fan.cones().iter().enumerate() {
        if c.dim() != 2 {
            continue;
        }
        let mut pts: Vec<(f64, f64)> = fan.cone_rays(i).iter().map(|&r| frame.clip(&fan.rays()[r])).collect();
        for corner in [(1, 0), (1, 1), (0, 1)] {
            let p = [Q::from_integer(corner.0.into()), Q::from_integer(corner.1.into())];
            if c.contains(&p) {
                pts.push((corner.0 as f64 * max, corner.1 as f64 * max));
            }
        }
        pts.sort_by(|a, b| a.1.atan2(a.0).total_cmp(&b.1.atan2(b.0)));
        let mut path = format!("M {:.2} {:.2}", frame.x(0.0), frame.y(0.0));
        for (u, v) in pts {
            let _ = write!(path, " L {:.2} {:.2}", frame.x(u), frame.y(v));
        }
        let _ = writeln!(s, "<path d=\"{path} Z\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>");
    }
    for (i, c) in fan.cones().iter().enumerate() {
        if c.dim() != 1 {
            continue;
        }
        let r = &fan.rays()[fan.cone_rays(i)[0]];
        let (u, v) = frame.clip(r);
        let _ = writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#08519c\" stroke-width=\"3\"/>",
            frame.x(0.0),
            frame.y(0.0),
            frame.x(u),
            frame.y(v)
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"13\" fill=\"#08519c\">({},{})</text>",
            frame.x(u) + 4.0,
            frame.y(v) - 4.0,
            r[0],
            r[1]
        );
    }
    let origin_in = fan.cones().iter().any(|c| c.is_origin());
    let fill = if origin_in { "#08519c" } else { "white" };
    let _ = writeln!(
        s,
        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"{fill}\" stroke=\"#08519c\" stroke-width=\"2\"/>",
        frame.x(0.0),
        frame.y(0.0)
    );
    let label = if fan.is_empty() {
        "empty".to_string()
    } else {
        format!("{:?}, origin semantics {}", t.kind, t.origin_semantics.name()).to_lowercase()
    };
    let _ = writeln!(s, "<text x=\"{MARGIN:.2}\" y=\"30\" font-size=\"14\">{label}</text>");
    let _ = writeln!(s, "<!-- sample point of each cone -->");
    for (i, c) in fan.cones().iter().enumerate() {
        let p = c.interior_point_or_origin();
        let _ = writeln!(s, "<!-- cone {i}: ({},{}) -->", p[0], p[1]);
    }
    s.push_str("</svg>\n");
    Ok(s)
}
