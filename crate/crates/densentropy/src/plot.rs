//! gnuplot scripts for sweep tables.

use std::fmt::Write;

use crate::report::{Report, Units};

fn series(out: &mut String, csv: &str, cols: &[String]) {
    let parts: Vec<String> = cols
        .iter()
        .map(|c| format!("'{csv}' using \"R\":\"{c}\" with linespoints title '{c}'"))
        .collect();
    let _ = writeln!(out, "plot {}", parts.join(", \\\n     "));
}

/// Entropy terms against R with horizontal lines at the atomic limits.
pub fn gnuplot_script(report: &Report, csv_path: &str) -> String {
    let unit = match report.units {
        Units::Nats => "nats",
        Units::Bits => "bits",
    };
    let header = report.csv_header();
    let pick = |prefix: &str| -> Vec<String> {
        header
            .iter()
            .filter(|h| h.starts_with(prefix) && !h.contains("_p_") && !h.contains("_p4["))
            .cloned()
            .collect()
    };
    let renyi_prefixes: Vec<String> = report
        .rows
        .first()
        .map(|r| r.renyi.iter().map(|b| format!("renyi_a{}_", b.alpha)).collect())
        .unwrap_or_default();

    let mut s = String::new();
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set terminal pngcairo size 1200,{} noenhanced", 400 * (2 + renyi_prefixes.len()));
    let _ = writeln!(s, "set output '{}.png'", csv_path.trim_end_matches(".csv"));
    let _ = writeln!(s, "set multiplot layout {},1", 2 + renyi_prefixes.len());
    let _ = writeln!(s, "set xlabel 'R (bohr)'");
    let _ = writeln!(s, "set logscale x");
    let _ = writeln!(s, "set key outside right");

    let panels: Vec<(String, Option<f64>, Vec<String>)> = {
        let r = report.reference.as_ref();
        let mut p = vec![
            ("Shannon entropy of the density".to_string(), r.map(|r| r.limit_rho), pick("S_")),
            ("Shannon entropy of the shape function".to_string(), r.map(|r| r.limit_sigma), pick("Sigma_")),
        ];
        for (k, prefix) in renyi_prefixes.iter().enumerate() {
            let limit = r.and_then(|r| r.renyi.get(k)).map(|x| x.limit_rho);
            p.push((format!("Rényi {}", prefix.trim_end_matches('_')), limit, pick(prefix)));
        }
        p
    };
    for (title, limit, cols) in panels {
        let _ = writeln!(s, "set title '{title}'");
        let _ = writeln!(s, "set ylabel 'entropy ({unit})'");
        let _ = writeln!(s, "unset arrow");
        if let Some(l) = limit {
            let _ = writeln!(s, "set arrow from graph 0, first {l} to graph 1, first {l} nohead dashtype 2");
        }
        series(&mut s, csv_path, &cols);
    }
    let _ = writeln!(s, "unset multiplot");
    s
}
