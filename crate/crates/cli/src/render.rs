//! Text and JSON forms of command results.

use std::fmt::Write;

use serde_json::{json, Value};

use orbikit::abelian::{AbelianInvariants, Character, QuotientMap};
use orbikit::alexander::{DepthEntry, RestrictionReport};
use orbikit::covers::{CoverReport, FiberReport, MeridianOrders};
use orbikit::fixtures::Fixture;
use orbikit::fpgroup::{OrbicurveSpec, Presentation};
use orbikit::io::{to_json, PresentationDoc};
use orbikit::sakuma::{namba_uniformizing, AbelianCoverGenus, SakumaReport};

pub struct Report {
    pub text: String,
    pub json: Value,
    /// Set when the report records a failed consistency check.
    pub failure: Option<String>,
}

fn value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn spec_text(s: &OrbicurveSpec) -> String {
    let idx: Vec<String> = s.indices.iter().map(u64::to_string).collect();
    format!(
        "genus {}, {} puncture(s), indices ({})",
        s.genus,
        s.punctures,
        idx.join(",")
    )
}

fn char_text(c: &Character) -> String {
    let e: Vec<String> = c.exponents.iter().map(u64::to_string).collect();
    format!("({})", e.join(","))
}

fn character_json(c: &Character) -> Value {
    json!(c.exponents)
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, failure: None }
    }

    pub fn presentation(p: &Presentation) -> Self {
        let mut t = format!("generators: {}\nrelators:\n", p.generators().join(" "));
        for r in p.relators() {
            writeln!(t, "  {}", p.format_word(r)).unwrap();
        }
        if !p.meridians().is_empty() {
            t.push_str("meridians:\n");
            for m in p.meridians() {
                writeln!(t, "  {} (index {})", p.format_word(&m.word), m.index).unwrap();
            }
        }
        Report::new(t, value(&PresentationDoc::from_presentation(p)))
    }

    pub fn h1(inv: &AbelianInvariants) -> Self {
        Report::new(format!("{inv}\n"), value(inv))
    }

    pub fn depths(q: &QuotientMap, table: &[DepthEntry]) -> Self {
        let mut t = format!("level {}\n", q.level());
        for e in table {
            writeln!(t, "{} depth {}", char_text(&e.character), e.depth).unwrap();
        }
        let rows: Vec<Value> = table
            .iter()
            .map(|e| json!({"character": character_json(&e.character), "depth": e.depth}))
            .collect();
        Report::new(t, json!({"level": q.level(), "orders": q.orders(), "characters": rows}))
    }

    pub fn charvar(q: &QuotientMap, k: usize, chars: &[Character]) -> Self {
        let mut t = format!("level {}, depth >= {k}: {} character(s)\n", q.level(), chars.len());
        for c in chars {
            writeln!(t, "{}", char_text(c)).unwrap();
        }
        let rows: Vec<Value> = chars.iter().map(character_json).collect();
        Report::new(
            t,
            json!({"level": q.level(), "orders": q.orders(), "k": k, "characters": rows}),
        )
    }

    pub fn covers(reports: &[CoverReport]) -> Self {
        let mut t = String::new();
        for (i, r) in reports.iter().enumerate() {
            if reports.len() > 1 {
                writeln!(t, "orbit {}: points {:?}", i + 1, r.orbit).unwrap();
            }
            writeln!(t, "degree {}", r.degree).unwrap();
            writeln!(t, "cover {}", spec_text(&r.cover_spec())).unwrap();
            writeln!(t, "euler characteristic {}", r.euler_orb_upstairs).unwrap();
            for u in &r.upstairs_points {
                writeln!(
                    t,
                    "  over {}: cycle of length {}, index {}",
                    u.below, u.cycle_length, u.index
                )
                .unwrap();
            }
            let f = r.flags;
            writeln!(
                t,
                "valid_unbranched {} uniformization {} virtually_regular {} regular {}",
                f.valid_unbranched, f.uniformization, f.virtually_regular, f.regular
            )
            .unwrap();
        }
        Report::new(t, json!({"covers": value(&reports)}))
    }

    pub fn subgroup(sub: &Presentation, inv: &AbelianInvariants) -> Self {
        let t = format!(
            "{} generators, {} relators\nabelianization {inv}\n",
            sub.num_generators(),
            sub.relators().len()
        );
        Report::new(
            t,
            json!({
                "abelianization": value(inv),
                "presentation": value(&PresentationDoc::from_presentation(sub)),
            }),
        )
    }

    pub fn fibers(r: &FiberReport) -> Self {
        let mut t = format!(
            "target {}, euler characteristic {}\nsource {}, euler characteristic {}\n",
            spec_text(&r.target),
            r.euler_target,
            spec_text(&r.source),
            r.euler_source
        );
        if let (Some(chi), Some(ok)) = (&r.euler_stated_source, r.stated_source_consistent) {
            writeln!(t, "stated source euler characteristic {chi}, consistent {ok}").unwrap();
        }
        Report::new(t, value(r))
    }

    pub fn sakuma(r: &SakumaReport) -> Self {
        let mut t = format!(
            "quotient order {}\nb1 base {}\ndepth sum {}\nb1 cover {}\n",
            r.quotient_order, r.b1_base, r.depth_sum, r.b1_cover
        );
        if let Some(o) = r.oracle_b1 {
            writeln!(t, "oracle b1 {o}").unwrap();
        }
        let rows: Vec<Value> = r
            .depth_table
            .iter()
            .map(|e| json!({"character": character_json(&e.character), "depth": e.depth}))
            .collect();
        let json = json!({
            "b1_base": r.b1_base,
            "b1_cover": r.b1_cover,
            "depth_sum": r.depth_sum,
            "depth_table": rows,
            "oracle_b1": r.oracle_b1,
            "quotient_order": r.quotient_order,
        });
        let mut report = Report::new(t, json);
        if !r.consistent() {
            report.failure = Some(format!(
                "b1 from depths is {}, the rewritten kernel has {}",
                r.b1_cover,
                r.oracle_b1.unwrap_or_default()
            ));
        }
        report
    }

    pub fn genus(spec: &OrbicurveSpec, g: &AbelianCoverGenus) -> Self {
        let t = format!(
            "base {}\neuler characteristic {}\ndegree {}\ngenus {}\nvariant genus {}\n",
            spec_text(spec),
            g.euler_orb,
            g.degree,
            g.genus,
            g.variant_genus
        );
        let mut json = value(g);
        json["indices"] = json!(spec.indices);
        json["namba_uniformizing"] = json!(namba_uniformizing(&spec.indices));
        Report::new(t, json)
    }

    pub fn restriction(r: &RestrictionReport) -> Self {
        let mut t = format!("k = {}, {} disagreement(s)\n", r.k, r.disagreements());
        for row in &r.rows {
            writeln!(
                t,
                "{} orbifold {} open {}{}",
                char_text(&row.character),
                row.depth_orbifold,
                row.depth_open,
                if row.agrees() { "" } else { " *" }
            )
            .unwrap();
        }
        let rows: Vec<Value> = r
            .rows
            .iter()
            .map(|row| {
                json!({
                    "character": character_json(&row.character),
                    "depth_orbifold": row.depth_orbifold,
                    "depth_open": row.depth_open,
                    "in_orbifold": row.in_orbifold,
                    "in_open": row.in_open,
                })
            })
            .collect();
        Report::new(t, json!({"k": r.k, "disagreements": r.disagreements(), "rows": rows}))
    }

    pub fn saturation(rows: &[MeridianOrders]) -> Self {
        let show = |o: Option<u64>| o.map_or("inf".to_string(), |v| v.to_string());
        let mut t = String::new();
        for m in rows {
            writeln!(
                t,
                "{} index {} order in H1 {} order in rep {} saturated {}",
                m.meridian,
                m.declared_index,
                show(m.order_h1),
                m.order_rep.map_or("-".to_string(), |v| v.to_string()),
                m.saturated
            )
            .unwrap();
        }
        Report::new(t, json!({"meridians": value(&rows)}))
    }

    pub fn fixture(f: &Fixture) -> Self {
        let mut t = format!("{} ({})\n{}\n", f.name, value(&f.kind).as_str().unwrap_or(""), f.description);
        if let Some(p) = &f.provenance {
            writeln!(t, "provenance: {p}").unwrap();
        }
        t.push_str(&to_json(&f.document));
        Report::new(t, value(f))
    }

    pub fn fixture_list<'a>(names: impl Iterator<Item = &'a str>) -> Self {
        let names: Vec<&str> = names.collect();
        Report::new(format!("{}\n", names.join("\n")), json!(names))
    }
}
