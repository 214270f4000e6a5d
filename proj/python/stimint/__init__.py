"""Multi-mode Fock simulator for stimulated emission and multi-photon interference."""

from ._core import (
    AmplifierScanConfig,
    AmplifierSpec,
    BeamSplitterScanConfig,
    BeamSplitterSpec,
    CoincidencePattern,
    DetectorFanout,
    DetectorGroup,
    EnhancementReport,
    EnhancementRow,
    FitResult,
    FockBasisState,
    ModePair,
    ModeRegistry,
    OverlapModel,
    QuantumState,
    ScanPattern,
    ScanPoint,
    ScanResult,
    annihilate,
    apply_amplifier,
    apply_beam_splitter,
    bunching_probability,
    click_probability_given_photons,
    coherent_state_truncated,
    coincidence_probability,
    create,
    default_delay_grid,
    fit_gaussian_peak,
    fit_report,
    format_enhancement_report,
    gaussian_peak,
    herald_single_photon,
    ideal_enhancement,
    inject_coherent_partial,
    inject_fock_partial,
    inner_product,
    mean_gain_photon_number,
    overlap_amplitude,
    parse_scan_csv,
    peak_to_wing,
    report_enhancement,
    run_amplifier_scan,
    run_beamsplitter_scan,
    scale_and_add,
    scan_csv_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
