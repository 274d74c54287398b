use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use idxsum_core::arith::{carmichael_lambda, euler_phi};
use idxsum_core::order::{count_index_class, enumerate_index_class, ModulusProfile};
use idxsum_core::theorems::{product_predictions, sum_predictions};
use idxsum_core::{ArithFn, CongruencePrediction};
use idxsum_verify::{default_registry, run_suite, SuiteConfig, VerificationReport};
use serde::Serialize;

use crate::output::{
    Agreement, ClassReport, ClassRow, ClassesReport, Partition, PredictionRow, Quantity, ValueReport,
};
use crate::{exit, ClassArgs, ConvOp, Format, Method};

fn emit<T: Serialize>(value: &T, format: Format, text: impl Fn(&T) -> String, csv: impl Fn(&T) -> String) {
    let rendered = match format {
        Format::Text => text(value),
        Format::Json => serde_json::to_string_pretty(value).expect("output serializes") + "\n",
        Format::Csv => csv(value),
    };
    print!("{rendered}");
}

fn code_for(status: Agreement) -> u8 {
    if status == Agreement::Mismatch {
        exit::MISMATCH
    } else {
        exit::OK
    }
}

fn class_report(args: &ClassArgs, quantity: Quantity) -> Result<ClassReport> {
    let (m, delta) = (args.modulus, args.delta);
    let lambda = carmichael_lambda(m);
    if lambda % delta != 0 {
        return Ok(ClassReport {
            quantity,
            modulus: m,
            delta,
            lambda,
            count: 0,
            oracle: None,
            elements: None,
            predictions: Vec::new(),
            status: Agreement::Empty,
        });
    }

    let closed = args.method != Method::Oracle;
    let oracle = args.method != Method::Closed;
    let summary = if oracle {
        Some(enumerate_index_class(m, delta)?)
    } else {
        None
    };
    let value = summary.as_ref().map(|s| match quantity {
        Quantity::Sum => s.sum_mod,
        Quantity::Product => s.product_mod,
    });
    let predictions: Vec<CongruencePrediction> = if closed {
        match quantity {
            Quantity::Sum => sum_predictions(m, delta)?,
            Quantity::Product => product_predictions(m, delta)?,
        }
    } else {
        Vec::new()
    };
    let predictions: Vec<PredictionRow> = predictions
        .into_iter()
        .map(|p| PredictionRow {
            theorem: p.theorem.as_str().to_owned(),
            asserted_modulus: p.asserted_modulus,
            predicted: p.value,
            oracle: value.map(|v| v % p.asserted_modulus),
        })
        .collect();
    let status = if closed && oracle {
        if predictions.iter().all(|p| p.agrees() == Some(true)) {
            Agreement::Agree
        } else {
            Agreement::Mismatch
        }
    } else {
        Agreement::Unchecked
    };
    let count = match &summary {
        Some(s) => s.count,
        None => count_index_class(m, delta)?,
    };
    Ok(ClassReport {
        quantity,
        modulus: m,
        delta,
        lambda,
        count,
        oracle: value,
        elements: if args.elements {
            summary.and_then(|s| s.elements)
        } else {
            None
        },
        predictions,
        status,
    })
}

fn run_class(args: &ClassArgs, quantity: Quantity) -> Result<u8> {
    let report = class_report(args, quantity)?;
    if args.elements && report.elements.is_none() && report.status != Agreement::Empty {
        bail!("--elements needs the oracle; use --method oracle or both");
    }
    emit(&report, args.format, ClassReport::to_text, ClassReport::to_csv);
    Ok(code_for(report.status))
}

pub fn class_sum(args: &ClassArgs) -> Result<u8> {
    run_class(args, Quantity::Sum)
}

pub fn class_product(args: &ClassArgs) -> Result<u8> {
    run_class(args, Quantity::Product)
}

pub fn classes(m: u64, format: Format) -> Result<u8> {
    let profile = ModulusProfile::build(m)?;
    let mut rows = Vec::new();
    for class in &profile.classes {
        let mut predictions = sum_predictions(m, class.delta)?
            .into_iter()
            .map(|p| p.agrees_with(class.sum_mod))
            .collect::<Vec<_>>();
        predictions.extend(
            product_predictions(m, class.delta)?
                .into_iter()
                .map(|p| p.agrees_with(class.product_mod)),
        );
        let closed_count = count_index_class(m, class.delta)?;
        let ok = closed_count == class.count && predictions.iter().all(|&b| b);
        rows.push(ClassRow {
            delta: class.delta,
            count: class.count,
            closed_count,
            sum: class.sum_mod,
            product: class.product_mod,
            closed_forms: predictions.len(),
            status: if ok { Agreement::Agree } else { Agreement::Mismatch },
        });
    }
    let total: u64 = rows.iter().map(|r| r.count).sum();
    let phi = euler_phi(m);
    let partition = Partition {
        total,
        phi,
        holds: total == phi,
    };
    let status = if partition.holds && rows.iter().all(|r| r.status == Agreement::Agree) {
        Agreement::Agree
    } else {
        Agreement::Mismatch
    };
    let report = ClassesReport {
        modulus: m,
        phi,
        lambda: profile.lambda,
        rows,
        partition,
        status,
    };
    emit(&report, format, ClassesReport::to_text, ClassesReport::to_csv);
    Ok(code_for(report.status))
}

pub struct VerifyArgs {
    pub max_modulus: Option<u64>,
    pub theorem: String,
    pub jobs: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub include_elements: bool,
}

pub fn verify(args: &VerifyArgs) -> Result<u8> {
    let registry = default_registry();
    let ids: Vec<&'static str> = if args.theorem.eq_ignore_ascii_case("all") {
        registry.ids().into_iter().map(|id| id.as_str()).collect()
    } else {
        vec![registry.resolve(&args.theorem)?.as_str()]
    };
    let mut config = match args.max_modulus {
        Some(n) => SuiteConfig::uniform(&ids, n, args.seed),
        None => {
            let mut c = SuiteConfig::default_suite(args.seed);
            c.tasks.retain(|t| ids.contains(&t.theorem_id.as_str()));
            c
        }
    }
    .with_jobs(args.jobs);
    for task in &mut config.tasks {
        task.options.include_elements = args.include_elements;
    }
    let report = run_suite(&config, &registry)?;
    let rendered = render_report(&report, args.format);
    match &args.out {
        Some(path) => {
            fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
            println!(
                "{}: {} cases, {} mismatches; report written to {}",
                if report.passed() { "PASS" } else { "FAIL" },
                report.total_cases(),
                report.total_mismatches(),
                path.display()
            );
        }
        None => print!("{rendered}"),
    }
    Ok(if report.passed() { exit::OK } else { exit::MISMATCH })
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

fn named_function(name: &str) -> Result<ArithFn> {
    Ok(match name {
        "mu" => ArithFn::mobius(),
        "phi" => ArithFn::phi(),
        "lambda" => ArithFn::lambda(),
        "M" => ArithFn::lehmer_m(),
        "I" => ArithFn::unit(),
        "u" => ArithFn::u(),
        "id" => ArithFn::id(),
        _ => bail!("unknown function {name:?}; expected one of mu, phi, lambda, M, I, u, id"),
    })
}

pub fn function(name: &str, n: u64, format: Format) -> Result<u8> {
    let f = named_function(name)?;
    let report = ValueReport {
        expression: name.to_owned(),
        n,
        value: f.eval(n).to_string(),
    };
    emit(&report, format, ValueReport::to_text, ValueReport::to_csv);
    Ok(exit::OK)
}

pub fn convolution(left: &str, right: &str, op: ConvOp, n: u64, format: Format) -> Result<u8> {
    let (f, g) = (named_function(left)?, named_function(right)?);
    let (h, symbol) = match op {
        ConvOp::Dirichlet => (f.dirichlet(&g), "*"),
        ConvOp::Lcm => (f.lcm_conv(&g), "o"),
    };
    let report = ValueReport {
        expression: format!("({left} {symbol} {right})"),
        n,
        value: h.eval(n).to_string(),
    };
    emit(&report, format, ValueReport::to_text, ValueReport::to_csv);
    Ok(exit::OK)
}
