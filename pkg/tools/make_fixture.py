"""Regenerate the synthetic corpus under data/fixture/.

Deterministic (fixed seed). The corpus is engineered so the test suite can
rely on a few structural facts, all asserted at the bottom of this script:

  * exactly 500 publications, all inside 2008-2013
  * every institution has at least one publication
  * a handful of journals carry no SNIP value (the only validation warnings)
  * in Computer Science at level 1, exactly U001/U002/U003 clear the
    40-publication threshold and U001 weakly dominates all five indicators
  * one journal (Vision Research) holds two leaf codes under one discipline

Run from the repository root:  python3 tools/make_fixture.py
"""

from __future__ import annotations

import csv
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "fixture"

SEED = 20080613

# --------------------------------------------------------------------------
# taxonomy: 15 disciplines, richer trees where the tests need structure
# --------------------------------------------------------------------------

TAXONOMY: list[tuple[int, str, int, int | None]] = []


def node(code: int, name: str, level: int, parent: int | None):
    TAXONOMY.append((code, name, level, parent))


def discipline(code: int, name: str):
    node(code, f"{name} (all)", 1, None)


def minimal_tree(l1: int, name: str, leaves: list[str]):
    discipline(l1, name)
    l2 = l1 + 100
    node(l2, f"General {name}", 2, l1)
    for i, leaf in enumerate(leaves, start=1):
        node(l2 + i, leaf, 3, l2)


discipline(1000, "Agricultural and Biological Sciences")
node(1100, "General Agricultural and Biological Sciences", 2, 1000)
node(1101, "Agricultural and Biological Sciences (others)", 3, 1100)
node(1102, "Agronomy and Crop Science", 3, 1100)
node(1200, "Plant and Animal Science", 2, 1000)
node(1201, "Plant Science", 3, 1200)
node(1202, "Animal Science and Zoology", 3, 1200)

minimal_tree(2000, "Biochemistry, Genetics and Molecular Biology", ["Molecular Biology", "Genetics"])
minimal_tree(3000, "Chemistry", ["Organic Chemistry", "Analytical Chemistry"])

discipline(4000, "Computer Science")
node(4100, "General Computer Science", 2, 4000)
node(4101, "Computer Science (miscellaneous)", 3, 4100)
node(4200, "Intelligent Systems", 2, 4000)
node(4201, "Artificial Intelligence", 3, 4200)
node(4202, "Computer Vision and Pattern Recognition", 3, 4200)
node(4300, "Computing Systems", 2, 4000)
node(4301, "Computer Networks and Communications", 3, 4300)
node(4302, "Software", 3, 4300)
node(4303, "Information Systems", 3, 4300)

discipline(5000, "Engineering")
node(5100, "General Engineering", 2, 5000)
node(5101, "Engineering (miscellaneous)", 3, 5100)
node(5200, "Electrical Engineering", 2, 5000)
node(5201, "Electrical and Electronic Engineering", 3, 5200)
node(5202, "Control and Systems Engineering", 3, 5200)
node(5300, "Mechanical and Industrial Engineering", 2, 5000)
node(5301, "Mechanical Engineering", 3, 5300)
node(5302, "Industrial and Manufacturing Engineering", 3, 5300)

discipline(6000, "Energy")
node(6100, "General Energy", 2, 6000)
node(6101, "Energy (miscellaneous)", 3, 6100)
node(6200, "Energy Systems", 2, 6000)
node(6201, "Nuclear Energy and Engineering", 3, 6200)
node(6202, "Renewable Energy, Sustainability and the Environment", 3, 6200)

minimal_tree(7000, "Environmental Science", ["Pollution", "Water Science and Technology"])
minimal_tree(8000, "Materials Science", ["Ceramics and Composites", "Polymers and Plastics"])
minimal_tree(9000, "Mathematics", ["Applied Mathematics", "Statistics and Probability"])

discipline(10000, "Medicine")
node(10100, "General Medicine", 2, 10000)
node(10101, "Medicine (miscellaneous)", 3, 10100)
node(10200, "Clinical Medicine", 2, 10000)
node(10201, "Ophthalmology", 3, 10200)
node(10202, "Cardiology and Cardiovascular Medicine", 3, 10200)
node(10300, "Sensory and Neural Systems", 2, 10000)
node(10301, "Sensory Systems", 3, 10300)

discipline(11000, "Physics and Astronomy")
node(11100, "General Physics and Astronomy", 2, 11000)
node(11101, "Physics and Astronomy (miscellaneous)", 3, 11100)
node(11200, "Matter and Fields", 2, 11000)
node(11201, "Condensed Matter Physics", 3, 11200)
node(11202, "Atomic and Molecular Physics, and Optics", 3, 11200)
node(11300, "Nuclear and Particle Physics", 2, 11000)
node(11301, "Nuclear and High Energy Physics", 3, 11300)

minimal_tree(12000, "Social Sciences", ["Education", "Development"])
minimal_tree(13000, "Earth and Planetary Sciences", ["Geophysics", "Oceanography"])
minimal_tree(14000, "Immunology and Microbiology", ["Immunology", "Virology"])
minimal_tree(15000, "Pharmacology, Toxicology and Pharmaceutics", ["Pharmaceutical Science", "Toxicology"])

# --------------------------------------------------------------------------
# institutions (ids are authoritative; names are synthetic)
# --------------------------------------------------------------------------

INSTITUTIONS = [
    ("U001", "Indus Institute of Technology", "ICT"),
    ("U002", "Karakoram University of Science", "KP"),
    ("U003", "Ravi Institute of Computing", "PB"),
    ("U004", "Mehran College of Engineering", "SD"),
    ("U005", "Chenab University", "PB"),
    ("U006", "Makran Institute of Marine Science", "BA"),
    ("U007", "Soan Valley University", "ICT"),
    ("U008", "Thar Institute of Energy Research", "SD"),
    ("U009", "Sutlej Agricultural University", "PB"),
    ("U010", "Hindukush Medical College", "KP"),
    ("U011", "Bolan Institute of Nuclear Studies", "BA"),
    ("U012", "Swat College of Natural Sciences", "KP"),
]

# --------------------------------------------------------------------------
# journals: (id, title, codes, snip) — snip None = absent from snip.csv value
# --------------------------------------------------------------------------

JOURNALS: list[tuple[str, str, tuple[int, ...], float | None]] = [
    # Computer Science flagships (highest SNIP in their leaves by design)
    ("J001", "Transactions on Learning Systems", (4201,), 5.10),
    ("J002", "Networks and Distributed Computing", (4301,), 4.40),
    ("J003", "Software Practice Quarterly", (4302,), 4.05),
    # Computer Science field
    ("J004", "Artificial Intelligence Review Letters", (4201,), 2.60),
    ("J005", "Journal of Machine Perception", (4201, 4202), 2.10),
    ("J006", "Pattern Analysis Archive", (4202,), 1.85),
    ("J007", "Applied Intelligence Bulletin", (4201,), 1.42),
    ("J008", "Heuristics and Search", (4201,), 1.10),
    ("J009", "Neural Computation Reports", (4201,), 0.95),
    ("J010", "Fuzzy Systems Digest", (4201,), 0.70),
    ("J011", "Evolutionary Methods Journal", (4201,), 0.55),
    ("J012", "Intelligent Agents Forum", (4201,), None),
    ("J013", "Computer Vision Annals", (4202,), 1.30),
    ("J014", "Image Understanding Letters", (4202,), 0.88),
    ("J015", "Wireless Networking Review", (4301,), 2.15),
    ("J016", "Telecommunication Systems Journal", (4301,), 1.25),
    ("J017", "Ad Hoc Networks Digest", (4301,), 0.64),
    ("J018", "Network Protocols Quarterly", (4301,), None),
    ("J019", "Programming Languages Today", (4302,), 1.95),
    ("J020", "Software Maintenance Review", (4302,), 1.05),
    ("J021", "Empirical Software Studies", (4302,), 0.80),
    ("J022", "Information Systems Frontiers Journal", (4303,), 1.60),
    ("J023", "Enterprise Computing Letters", (4303,), 0.75),
    ("J024", "General Computing Review", (4101,), 1.20),
    ("J025", "Computing Perspectives", (4101,), 0.58),
    ("J026", "Computational Mathematics and Software", (4302, 9101), 2.30),
    # Engineering
    ("J027", "Electrical Engineering Transactions", (5201,), 3.40),
    ("J028", "Power Electronics Journal", (5201,), 2.20),
    ("J029", "Circuits and Devices Letters", (5201,), 1.70),
    ("J030", "Electronics Archive", (5201,), 1.15),
    ("J031", "Microelectronics Digest", (5201,), 0.85),
    ("J032", "Signal Processing Forum", (5201,), 0.62),
    ("J033", "Electrotechnics Bulletin", (5201,), None),
    ("J034", "Smart Grid Review", (5201,), 0.44),
    ("J035", "Intelligent Power Systems", (4201, 5202), 1.50),
    ("J036", "Control Engineering Annals", (5202,), 2.05),
    ("J037", "Automation Letters", (5202,), 0.90),
    ("J038", "Mechanical Systems Journal", (5301,), 1.80),
    ("J039", "Thermal Engineering Review", (5301,), 0.95),
    ("J040", "Manufacturing Processes Digest", (5302,), 1.35),
    ("J041", "Industrial Engineering Letters", (5302,), 0.66),
    ("J042", "General Engineering Review", (5101,), 1.00),
    ("J043", "Engineering Perspectives", (5101,), None),
    # Energy
    ("J044", "Nuclear Energy and Engineering Journal", (6201,), 2.75),
    ("J045", "Reactor Physics Letters", (6201,), 1.55),
    ("J046", "Nuclear Instruments and Detectors", (6201, 11301), 1.90),
    ("J047", "Radiation Applications Digest", (6201,), 0.72),
    ("J048", "Nuclear Safety Forum", (6201,), None),
    ("J049", "Renewable Energy Progress", (6202,), 2.45),
    ("J050", "Solar and Wind Technology", (6202,), 1.18),
    ("J051", "Energy Perspectives", (6101,), 0.98),
    # Medicine
    ("J052", "Vision Research", (10201, 10301), 3.10),
    ("J053", "Ophthalmic Surgery Journal", (10201,), 1.65),
    ("J054", "Retina and Cornea Letters", (10201,), 0.92),
    ("J055", "Cardiovascular Medicine Annals", (10202,), 2.35),
    ("J056", "Heart and Circulation Reports", (10202,), 1.12),
    ("J057", "Sensory Neuroscience Digest", (10301,), 1.48),
    ("J058", "General Medicine Archive", (10101,), 1.74),
    ("J059", "Clinical Practice Review", (10101,), 0.83),
    # Physics
    ("J060", "Condensed Matter Letters", (11201,), 2.90),
    ("J061", "Solid State Physics Journal", (11201,), 1.40),
    ("J062", "Magnetism and Materials Digest", (11201,), 0.77),
    ("J063", "Optics and Atomic Physics Review", (11202,), 2.00),
    ("J064", "Laser Science Bulletin", (11202,), 1.08),
    ("J065", "High Energy Physics Annals", (11301,), 2.55),
    ("J066", "Particle Phenomenology Letters", (11301,), 1.22),
    ("J067", "General Physics Forum", (11101,), 1.02),
    # Agriculture
    ("J068", "Crop Science Journal", (1102,), 1.88),
    ("J069", "Agricultural Systems Review", (1101,), 1.28),
    ("J070", "Farm Research Bulletin", (1101,), 0.69),
    ("J071", "Plant Biology Reports", (1201,), 1.52),
    ("J072", "Botany and Ecology Letters", (1201,), 0.86),
    ("J073", "Animal Production Science", (1202,), 1.16),
    ("J074", "Agro-Environmental Chemistry", (1102, 7101, 3102), 1.44),
    ("J075", "Agricultural Perspectives", (1101,), None),
    # tail disciplines
    ("J076", "Molecular Biology Reports", (2101,), 2.25),
    ("J077", "Genetics Quarterly", (2102,), 1.36),
    ("J078", "Organic Synthesis Journal", (3101,), 1.94),
    ("J079", "Analytical Methods Digest", (3102,), 1.06),
    ("J080", "Pollution Studies Review", (7101,), 1.58),
    ("J081", "Water Resources Journal", (7102,), 1.24),
    ("J082", "Ceramics and Composites Letters", (8101,), 1.46),
    ("J083", "Polymer Science Bulletin", (8102,), 0.93),
    ("J084", "Applied Mathematics Archive", (9101,), 1.76),
    ("J085", "Statistics and Data Annals", (9102,), 1.30),
    ("J086", "Education Research Forum", (12101,), 0.96),
    ("J087", "Annals of Development Studies", (12102,), 0.0),
    ("J088", "Geophysics Reports", (13101,), 1.62),
    ("J089", "Oceanography Letters", (13102,), None),
    ("J090", "Immunology Today Journal", (14101,), 2.15),
    ("J091", "Virology Digest", (14102,), 1.34),
    ("J092", "Pharmaceutical Science Review", (15101,), 1.68),
    ("J093", "Toxicology Reports", (15102,), None),
    ("J094", "Marine Biology Annals", (1202, 13102), 1.12),
]

YEARS = (2008, 2009, 2010, 2011, 2012, 2013)


def weighted(rnd: random.Random, pool: list[tuple[str, int]]) -> str:
    ids = [jid for jid, _ in pool]
    weights = [w for _, w in pool]
    return rnd.choices(ids, weights=weights, k=1)[0]


def cites(rnd: random.Random, profile: str) -> int:
    """Skewed citation counts; 'hot' >> 'warm' >> 'cool' in mean."""
    roll = rnd.random()
    if profile == "hot":
        if roll < 0.30:
            return rnd.randint(15, 60)
        if roll < 0.70:
            return rnd.randint(5, 20)
        return rnd.randint(0, 6)
    if profile == "warm":
        if roll < 0.20:
            return rnd.randint(8, 20)
        if roll < 0.70:
            return rnd.randint(2, 10)
        return rnd.randint(0, 3)
    if roll < 0.10:
        return rnd.randint(6, 15)
    if roll < 0.60:
        return rnd.randint(1, 6)
    return rnd.randint(0, 2)


def build_publications(rnd: random.Random) -> list[tuple[str, str, str, int, int, str]]:
    pubs: list[tuple[str, str, int, int]] = []  # (institution, journal, year, citations)

    def emit(inst: str, pool: list[tuple[str, int]], n: int, profile: str):
        for _ in range(n):
            pubs.append((inst, weighted(rnd, pool), rnd.choice(YEARS), cites(rnd, profile)))

    # --- Computer Science rating scope: U001 engineered to dominate -------
    cs_flagships = [("J001", 5), ("J002", 3), ("J003", 3)]
    cs_field = [
        ("J004", 3), ("J005", 2), ("J006", 2), ("J007", 2), ("J008", 2),
        ("J009", 2), ("J010", 1), ("J011", 1), ("J012", 2), ("J013", 2),
        ("J014", 1), ("J015", 2), ("J016", 2), ("J017", 1), ("J018", 2),
        ("J019", 2), ("J020", 1), ("J021", 1), ("J022", 2), ("J023", 1),
        ("J024", 2), ("J025", 1), ("J026", 1),
    ]
    emit("U001", cs_flagships, 70, "hot")
    emit("U001", cs_field, 40, "hot")
    emit("U002", cs_flagships, 22, "warm")
    emit("U002", cs_field, 55, "warm")
    emit("U003", cs_flagships, 8, "cool")
    emit("U003", cs_field, 39, "cool")

    # --- Electrical Engineering level-3 benchmark scope --------------------
    ee_pool = [
        ("J027", 3), ("J028", 3), ("J029", 2), ("J030", 2), ("J031", 2),
        ("J032", 1), ("J033", 2), ("J034", 1),
    ]
    emit("U004", ee_pool, 30, "warm")
    emit("U001", ee_pool, 20, "hot")
    emit("U002", ee_pool, 12, "warm")
    emit("U008", ee_pool, 8, "cool")
    emit("U011", ee_pool, 6, "warm")
    emit("U004", [("J035", 2), ("J036", 2), ("J037", 1)], 8, "warm")
    emit("U004", [("J038", 2), ("J039", 1), ("J040", 2), ("J041", 1), ("J042", 1), ("J043", 1)], 10, "cool")

    # --- Nuclear Energy niche: small institutes, below any threshold -------
    nuclear_pool = [("J044", 3), ("J045", 2), ("J046", 2), ("J047", 1), ("J048", 1)]
    emit("U008", nuclear_pool, 10, "warm")
    emit("U011", nuclear_pool, 10, "hot")
    emit("U012", nuclear_pool, 3, "cool")
    emit("U008", [("J049", 2), ("J050", 1), ("J051", 1)], 6, "cool")

    # --- Medicine -----------------------------------------------------------
    emit("U010", [("J052", 3), ("J053", 2), ("J054", 1)], 10, "warm")
    emit("U010", [("J055", 2), ("J056", 1), ("J057", 1), ("J058", 2), ("J059", 1)], 12, "warm")
    emit("U007", [("J052", 1), ("J057", 1), ("J058", 2), ("J059", 1)], 8, "cool")

    # --- Agriculture --------------------------------------------------------
    agri_pool = [("J068", 3), ("J069", 2), ("J070", 1), ("J071", 2), ("J072", 1), ("J074", 1), ("J075", 1)]
    emit("U009", agri_pool, 24, "warm")
    emit("U006", [("J073", 2), ("J094", 2)], 6, "cool")

    # --- Physics ------------------------------------------------------------
    physics_pool = [("J060", 3), ("J061", 2), ("J062", 1), ("J063", 2), ("J064", 1), ("J067", 1)]
    emit("U005", physics_pool, 18, "warm")
    emit("U012", [("J065", 2), ("J066", 1), ("J067", 1), ("J046", 1)], 10, "warm")

    # --- long tail: every institution and discipline stays populated -------
    emit("U007", [("J084", 2), ("J085", 1), ("J086", 1), ("J087", 1)], 6, "cool")
    emit("U012", [("J078", 2), ("J079", 1)], 4, "cool")
    emit("U006", [("J080", 1), ("J081", 2), ("J088", 1), ("J089", 2)], 8, "cool")
    emit("U004", [("J082", 2), ("J083", 1)], 4, "cool")
    emit("U010", [("J090", 2), ("J091", 1), ("J092", 1), ("J093", 1)], 8, "warm")
    emit("U002", [("J076", 2), ("J077", 1)], 5, "warm")
    emit("U009", [("J092", 1), ("J093", 1), ("J074", 2)], 5, "cool")
    emit("U005", [("J026", 1), ("J084", 2)], 4, "cool")
    emit("U003", [("J084", 1), ("J085", 1)], 4, "cool")
    emit("U011", [("J046", 2), ("J065", 1)], 3, "warm")
    emit("U007", [("J086", 2), ("J087", 1)], 3, "cool")
    emit("U006", [("J094", 1)], 1, "cool")

    assert len(pubs) == 500, f"expected 500 publications, built {len(pubs)}"

    rows = []
    for i, (inst, jid, year, cit) in enumerate(pubs, start=1):
        title = f"Study {i:03d} in {dict((j[0], j[1]) for j in JOURNALS)[jid]}"
        rows.append((f"P{i:04d}", inst, jid, year, cit, title))
    return rows


def write_csvs(pub_rows) -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    def dump(name: str, header: list[str], rows) -> None:
        with (OUT / name).open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)

    dump(
        "taxonomy.csv",
        ["code", "name", "level", "parent_code"],
        [(c, n, lvl, "" if p is None else p) for c, n, lvl, p in TAXONOMY],
    )
    dump("institutions.csv", ["institution_id", "name", "region"], INSTITUTIONS)
    dump(
        "journals.csv",
        ["journal_id", "title", "asjc_codes"],
        [(jid, title, ";".join(map(str, codes))) for jid, title, codes, _ in JOURNALS],
    )
    dump(
        "snip.csv",
        ["journal_id", "snip_2010"],
        [(jid, "" if snip is None else snip) for jid, _, _, snip in JOURNALS],
    )
    dump(
        "publications.csv",
        ["pub_id", "institution_id", "journal_id", "year", "citations", "title"],
        pub_rows,
    )


def check_engineered_properties() -> None:
    sys.path.insert(0, str(ROOT / "src"))
    from nichebench import (
        PRESETS,
        RatingQuery,
        build_snip_quartiles,
        indicator_vector,
        load_corpus_dir,
        rate_subject,
        validate_corpus,
    )

    corpus = load_corpus_dir(OUT)
    report = validate_corpus(corpus)
    assert report.ok, report.errors
    snipless = sum(1 for _, _, _, snip in JOURNALS if snip is None)
    assert len(report.warnings) == snipless, (len(report.warnings), snipless)

    quartiles = build_snip_quartiles(corpus)
    for flagship, leaf in (("J001", 4201), ("J002", 4301), ("J003", 4302)):
        assert flagship in quartiles.top(leaf), (flagship, leaf)

    window = (2008, 2013)
    vectors = {
        iid: indicator_vector(corpus, iid, 4000, 1, window)
        for iid, _, _ in INSTITUTIONS
    }
    passing = sorted(iid for iid, vec in vectors.items() if vec.total_pubs >= 40)
    assert passing == ["U001", "U002", "U003"], passing
    champion = vectors["U001"].as_tuple()
    for other in ("U002", "U003"):
        rival = vectors[other].as_tuple()
        assert all(c >= r for c, r in zip(champion, rival)), (champion, rival)
        assert all(c > r for c, r in zip(champion, rival)), (champion, rival)

    for preset in PRESETS.values():
        table = rate_subject(
            corpus,
            RatingQuery(subject_code=4000, level=1, year_window=window, weights=preset),
        )
        assert table[0].institution_id == "U001"
        assert table[0].percentage == 100.0 and table[0].band == 1

    print("fixture ok:", corpus.summary())


if __name__ == "__main__":
    rnd = random.Random(SEED)
    write_csvs(build_publications(rnd))
    check_engineered_properties()
