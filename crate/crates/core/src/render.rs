//! Text, CSV and SVG renderings. All values are computed exactly and only
//! turned into decimals here.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::concordance::{
    BoundReport, ConcordanceError, DeltaNReport, Functional, IndependenceCertificate, KnotAtom, KnotExpr,
    ObstructionReport, Verdict, Witness, DECLARED_WATERMARK,
};
use crate::rational::{fmt_decimal, fmt_exact, int, Rational};
use crate::seifert::{signature_profile, torus_jump_list, SeifertError};
use crate::upsilon::PLFunction;

pub const DEFAULT_DIGITS: usize = 6;

fn grid_points(grid: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut t = grid.clone();
    while t <= int(2) {
        out.push(t.clone());
        t += grid;
    }
    out
}

/// Exact `Υ` and `Υ(t)/t` at every breakpoint; the row at 0 carries the
/// initial slope as `Υ(t)/t`.
pub fn upsilon_breakpoints(u: &PLFunction) -> String {
    let mut s = String::from("t Upsilon(t) Upsilon(t)/t\n");
    for (t, y) in u.points() {
        let ratio = u.over_t(t).expect("breakpoints lie in the domain");
        writeln!(s, "{} {} {}", fmt_exact(t), fmt_exact(y), fmt_exact(&ratio)).unwrap();
    }
    s
}

/// `t, Υ(t), Υ(t)/t` on the grid `grid, 2·grid, …` up to 2.
pub fn upsilon_csv(u: &PLFunction, grid: &Rational, digits: usize) -> String {
    let mut s = String::from("t,upsilon,upsilon_over_t\n");
    for t in grid_points(grid) {
        let y = u.eval(&t).expect("grid lies in the domain");
        let r = &y / &t;
        writeln!(s, "{},{},{}", fmt_decimal(&t, digits), fmt_decimal(&y, digits), fmt_decimal(&r, digits)).unwrap();
    }
    s
}

/// Axis-aligned line chart with optional point markers.
struct Chart {
    title: String,
    x: (f64, f64),
    y: (f64, f64),
    x_label: String,
    y_label: String,
}

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 56.0;

impl Chart {
    fn px(&self, x: f64) -> f64 {
        PAD + (x - self.x.0) / (self.x.1 - self.x.0) * (W - 2.0 * PAD)
    }

    fn py(&self, y: f64) -> f64 {
        H - PAD - (y - self.y.0) / (self.y.1 - self.y.0) * (H - 2.0 * PAD)
    }

    fn render(&self, line: &[(f64, f64)], markers: &[(f64, f64)], x_ticks: &[(f64, String)]) -> String {
        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
        )
        .unwrap();
        writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#).unwrap();
        writeln!(s, r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#, W / 2.0, escape(&self.title))
            .unwrap();
        let (x0, x1, y0, y1) = (self.px(self.x.0), self.px(self.x.1), self.py(self.y.0), self.py(self.y.1));
        writeln!(s, r##"<rect x="{x0:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#888"/>"##, x1 - x0, y0 - y1)
            .unwrap();
        if self.y.0 < 0.0 && self.y.1 > 0.0 {
            let z = self.py(0.0);
            writeln!(s, r##"<line x1="{x0:.2}" y1="{z:.2}" x2="{x1:.2}" y2="{z:.2}" stroke="#bbb" stroke-dasharray="4 3"/>"##)
                .unwrap();
        }
        for (x, label) in x_ticks {
            let px = self.px(*x);
            writeln!(s, r##"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{:.2}" stroke="#888"/>"##, y0 + 5.0).unwrap();
            writeln!(s, r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, y0 + 18.0, escape(label)).unwrap();
        }
        for y in nice_ticks(self.y.0, self.y.1) {
            let py = self.py(y);
            writeln!(s, r##"<line x1="{:.2}" y1="{py:.2}" x2="{x0:.2}" y2="{py:.2}" stroke="#888"/>"##, x0 - 5.0).unwrap();
            writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, x0 - 8.0, py + 4.0, trim_float(y)).unwrap();
        }
        writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, (x0 + x1) / 2.0, H - 12.0, escape(&self.x_label))
            .unwrap();
        writeln!(
            s,
            r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
            (y0 + y1) / 2.0,
            (y0 + y1) / 2.0,
            escape(&self.y_label)
        )
        .unwrap();
        let pts: Vec<String> = line.iter().map(|(x, y)| format!("{:.2},{:.2}", self.px(*x), self.py(*y))).collect();
        writeln!(s, r##"<polyline fill="none" stroke="#1f5fbf" stroke-width="2" points="{}"/>"##, pts.join(" ")).unwrap();
        for (x, y) in markers {
            writeln!(s, r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#d0402b"/>"##, self.px(*x), self.py(*y)).unwrap();
        }
        s.push_str("</svg>\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn trim_float(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn nice_ticks(lo: f64, hi: f64) -> Vec<f64> {
    let span = hi - lo;
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0].iter().map(|m| m * mag).find(|s| span / s <= 8.0).unwrap_or(10.0 * mag);
    let mut t = (lo / step).ceil() * step;
    let mut out = Vec::new();
    while t <= hi + 1e-9 {
        out.push(if t.abs() < 1e-12 { 0.0 } else { t });
        t += step;
    }
    out
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut lo, mut hi) = values.fold((0.0f64, 0.0f64), |(a, b), v| (a.min(v), b.max(v)));
    if hi - lo < 1.0 {
        lo -= 0.5;
        hi += 0.5;
    }
    let pad = (hi - lo) * 0.08;
    (lo - pad, hi + pad)
}

/// `Υ(t)/t` on `(0, 2]`, sampled on the grid and at every breakpoint, with
/// the breakpoints marked.
pub fn upsilon_svg(u: &PLFunction, grid: &Rational, title: &str) -> String {
    let mut ts: Vec<Rational> = grid_points(grid);
    ts.extend(u.breakpoints().cloned());
    ts.push(int(0));
    ts.sort();
    ts.dedup();
    let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
    let line: Vec<(f64, f64)> = ts.iter().map(|t| (f(t), f(&u.over_t(t).unwrap()))).collect();
    let markers: Vec<(f64, f64)> = u.points().iter().map(|(t, _)| (f(t), f(&u.over_t(t).unwrap()))).collect();
    let chart = Chart {
        title: title.to_string(),
        x: (0.0, 2.0),
        y: padded_range(line.iter().map(|p| p.1)),
        x_label: "t".into(),
        y_label: "Upsilon(t)/t".into(),
    };
    let ticks: Vec<(f64, String)> = [0.0, 0.5, 1.0, 1.5, 2.0].iter().map(|x| (*x, trim_float(*x))).collect();
    chart.render(&line, &markers, &ticks)
}

/// Jumps of `λ ↦ σ_K(e^{2πiλ})` on `(0, 1/2]`. Jump sizes are exact; the
/// positions of roots of matrix knots are approximate and used for plotting only.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureSteps {
    pub jumps: Vec<(f64, i64)>,
}

impl SignatureSteps {
    pub fn final_value(&self) -> i64 {
        self.jumps.iter().map(|j| j.1).sum()
    }
}

pub fn signature_steps(k: &KnotExpr) -> Result<SignatureSteps, ConcordanceError> {
    let mut jumps: Vec<(f64, i64)> = Vec::new();
    for (c, a) in k.terms() {
        match a {
            KnotAtom::Torus { p, q } => {
                for (lambda, j) in torus_jump_list(*p, *q)? {
                    jumps.push((lambda.to_f64().unwrap_or(f64::NAN), c * j));
                }
            }
            KnotAtom::Declared(_) => {
                return Err(ConcordanceError::MissingInvariantData {
                    atom: a.to_string(),
                    functional: "signature function".into(),
                })
            }
            _ => {
                let m = a.seifert_matrix()?.ok_or(SeifertError::NotIsolated)?;
                let (roots, values) = signature_profile(&m)?;
                for (i, r) in roots.iter().enumerate() {
                    let lambda = r.approx_angle() / (2.0 * std::f64::consts::PI);
                    jumps.push((lambda, c * (values[i + 1] - values[i])));
                }
            }
        }
    }
    jumps.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(SignatureSteps { jumps })
}

pub fn signature_svg(steps: &SignatureSteps, title: &str) -> String {
    let mut line = vec![(0.0, 0.0)];
    let mut markers = Vec::new();
    let mut v = 0i64;
    for (x, j) in &steps.jumps {
        line.push((*x, v as f64));
        v += j;
        line.push((*x, v as f64));
        markers.push((*x, v as f64));
    }
    line.push((0.5, v as f64));
    let chart = Chart {
        title: title.to_string(),
        x: (0.0, 0.5),
        y: padded_range(line.iter().map(|p| p.1)),
        x_label: "lambda (omega = exp(2 pi i lambda))".into(),
        y_label: "signature".into(),
    };
    let ticks: Vec<(f64, String)> =
        [(0.0, "0"), (0.125, "1/8"), (0.25, "1/4"), (0.375, "3/8"), (0.5, "1/2")].iter().map(|(x, l)| (*x, l.to_string())).collect();
    chart.render(&line, &markers, &ticks)
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::Pair { first: Functional::UpsilonOverT(s), first_value, second: Functional::UpsilonOverT(t), second_value } => {
            format!(
                "{} = {} - ({}) = {}",
                Functional::Psi { s: s.clone(), t: t.clone() },
                fmt_exact(first_value),
                fmt_exact(second_value),
                fmt_exact(&(first_value - second_value))
            )
        }
        Witness::Pair { first, first_value, second, second_value } => format!(
            "{first} - {second} = {} - ({}) = {}",
            fmt_exact(first_value),
            fmt_exact(second_value),
            fmt_exact(&(first_value - second_value))
        ),
        Witness::Single { functional, value } => format!("{functional} = {value}"),
    }
}

fn kv(s: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(s, "{key}: {value}").unwrap();
}

fn watermark(s: &mut String, declared: bool) {
    if declared {
        kv(s, "warning", DECLARED_WATERMARK);
    }
}

pub fn render_bound_report(r: &BoundReport, digits: usize) -> String {
    let mut s = String::new();
    kv(&mut s, "expr", &r.expr);
    for (name, b) in [("ag", &r.ag), ("as", &r.as_)] {
        kv(&mut s, &format!("{name}_lower"), fmt_exact(&b.value));
        kv(&mut s, &format!("{name}_lower_decimal"), fmt_decimal(&b.value, digits));
        kv(&mut s, &format!("{name}_lower_ceiling"), &b.ceiling);
        kv(&mut s, &format!("{name}_witness"), b.witness.as_ref().map_or("none".to_string(), describe_witness));
    }
    for (f, why) in &r.skipped {
        kv(&mut s, "skipped", format!("{f} ({why})"));
    }
    watermark(&mut s, r.uses_declared);
    s
}

pub fn render_obstruction(r: &ObstructionReport) -> String {
    let mut s = String::new();
    kv(&mut s, "expr", &r.expr);
    if r.witnesses.is_empty() {
        kv(&mut s, "verdict", "no obstruction found");
    } else {
        kv(&mut s, "verdict", "not in the subgroup generated by alternating knots");
        for w in &r.witnesses {
            kv(&mut s, "witness", describe_witness(w));
        }
    }
    for (f, why) in &r.skipped {
        kv(&mut s, "skipped", format!("{f} ({why})"));
    }
    watermark(&mut s, r.uses_declared);
    s
}

pub fn render_certificate(c: &IndependenceCertificate) -> String {
    let mut s = String::new();
    let verdict = match c.verdict {
        Verdict::Independent => "independent",
        Verdict::Inconclusive => "inconclusive",
    };
    kv(&mut s, "verdict", verdict);
    for (i, k) in c.knots.iter().enumerate() {
        kv(&mut s, &format!("knot[{i}]"), k);
    }
    for (j, (f, why)) in c.functionals.iter().zip(&c.selection).enumerate() {
        kv(&mut s, &format!("functional[{j}]"), format!("{f} ({why})"));
    }
    for (i, row) in c.matrix.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        let cells = if cells.is_empty() { "(no functionals)".to_string() } else { cells.join(" ") };
        kv(&mut s, &format!("row[{i}]"), cells);
    }
    if !c.order.is_empty() {
        let order: Vec<String> = c.order.iter().map(|(r, col)| format!("({r},{col})")).collect();
        kv(&mut s, "triangular_order", order.join(" "));
    }
    if let Some(n) = &c.note {
        kv(&mut s, "note", n);
    }
    watermark(&mut s, c.uses_declared);
    s
}

pub fn render_deltan(r: &DeltaNReport, digits: usize) -> String {
    let mut s = String::new();
    kv(&mut s, "n", r.n);
    kv(&mut s, "polynomial", &r.polynomial);
    kv(&mut s, "value_at_1", fmt_exact(&r.value_at_one));
    kv(&mut s, "irreducible", r.irreducible);
    for iv in &r.real_roots {
        kv(&mut s, "real_root", format!("({}, {})", fmt_exact(&iv.lo), fmt_exact(&iv.hi)));
    }
    kv(&mut s, "negative_real_roots", r.negative_real_roots());
    kv(&mut s, "unit_circle_pairs", r.circle_pairs);
    let iv = &r.circle_root.interval;
    kv(&mut s, "circle_root_x", format!("({}, {})", fmt_exact(&iv.lo), fmt_exact(&iv.hi)));
    let rows: Vec<String> =
        r.seifert.entries().iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
    kv(&mut s, "seifert_matrix", format!("[{}]", rows.join("; ")));
    kv(&mut s, "alexander_roundtrip", r.roundtrip);
    kv(&mut s, "jump", r.jump);
    let verdict = match &r.murasugi {
        crate::seifert::MurasugiVerdict::Compatible => "compatible".to_string(),
        crate::seifert::MurasugiVerdict::Incompatible(v) => format!("incompatible ({v:?})"),
    };
    kv(&mut s, "alternating_test", verdict);
    kv(&mut s, "ag_lower", fmt_exact(&r.ag_bound));
    kv(&mut s, "ag_lower_decimal", fmt_decimal(&r.ag_bound, digits));
    kv(&mut s, "ag_lower_ceiling", crate::rational::ceil(&r.ag_bound));
    s
}
