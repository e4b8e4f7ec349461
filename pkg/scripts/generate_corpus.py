#!/usr/bin/env python3
"""Generate the synthetic resume corpus with gold annotations.

Writes >=30 resumes (EN and FR, plain text and PDF, including two-column
PDF layouts) plus manifest.json holding the gold values. Gold experience
months are computed here by direct month-set enumeration over the
intervals the generator itself wrote, never by calling the library under
test. Deterministic: fixed seed, stable iteration order.

Run from the repo root:  python3 scripts/generate_corpus.py
"""

import json
import random
import re
from pathlib import Path

from reportlab.lib.pagesizes import letter
from reportlab.pdfbase.pdfmetrics import stringWidth
from reportlab.pdfgen import canvas

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus"
SEED = 20250601
CLOCK = (2025, 6)  # (year, month) used for open-ended intervals

# ---------------------------------------------------------------------------
# Content pools. Skill surfaces are paired with the lexicon id they must
# resolve to; misspelled surfaces stay within one edit of the canonical so
# the 0.85 fuzzy threshold still accepts them.
# ---------------------------------------------------------------------------

PEOPLE = [
    ("Amine", "Benali"), ("Yasmine", "Haddad"), ("Karim", "Bouzid"), ("Sara", "Cherif"),
    ("Mohamed", "Mansouri"), ("Lina", "Boudiaf"), ("Sofiane", "Brahimi"), ("Nadia", "Meziane"),
    ("Omar", "Toumi"), ("Leila", "Bensalem"), ("Walid", "Kaci"), ("Samira", "Saidi"),
    ("Mehdi", "Belkacem"), ("Imene", "Zerhouni"), ("Khaled", "Taleb"), ("Zineb", "Ziani"),
    ("Youcef", "Ferhat"), ("Meriem", "Guerfi"), ("Nassim", "Bouchareb"), ("Farid", "Benammar"),
    ("Hichem", "Hamidi"), ("Amina", "Moussaoui"), ("Rachid", "Slimani"), ("Houda", "Lamari"),
    ("Bilal", "Rahmani"), ("Katia", "Ouali"), ("Anis", "Dahmani"), ("Selma", "Khelifi"),
    ("Jane", "Doe"), ("John", "Smith"), ("Emma", "Martin"), ("David", "Laurent"),
]

SKILLS = [
    ("Python", "python"), ("Java", "java"), ("JavaScript", "javascript"), ("JS", "javascript"),
    ("TypeScript", "typescript"), ("React", "react"), ("Angular", "angular"), ("Vue.js", "vue"),
    ("Node.js", "node"), ("Django", "django"), ("Flask", "flask"), ("SQL", "sql"),
    ("MySQL", "mysql"), ("PostgreSQL", "postgresql"), ("MongoDB", "mongodb"), ("Redis", "redis"),
    ("Docker", "docker"), ("Kubernetes", "kubernetes"), ("K8s", "kubernetes"),
    ("Terraform", "terraform"), ("Ansible", "ansible"), ("Jenkins", "jenkins"), ("CI/CD", "ci-cd"),
    ("Git", "git"), ("Linux", "linux"), ("Ubuntu", "ubuntu"), ("Bash", "bash"), ("AWS", "aws"),
    ("Azure", "azure"), ("Machine Learning", "machine-learning"), ("ML", "machine-learning"),
    ("Deep Learning", "deep-learning"), ("data analytics", "data-analysis"),
    ("Data Analysis", "data-analysis"), ("Data Science", "data-science"),
    ("TensorFlow", "tensorflow"), ("PyTorch", "pytorch"), ("scikit-learn", "scikit-learn"),
    ("pandas", "pandas"), ("NumPy", "numpy"), ("Apache Spark", "spark"), ("Kafka", "kafka"),
    ("Elasticsearch", "elasticsearch"), ("Power BI", "power-bi"), ("Tableau", "tableau"),
    ("Agile", "agile"), ("Scrum", "agile"), ("Gestion de projet", "project-management"),
    ("DevOps", "devops"), ("Microservices", "microservices"), ("REST API", "rest-api"),
    ("GraphQL", "graphql"), ("HTML", "html"), ("CSS", "css"), ("PHP", "php"),
    ("Laravel", "laravel"), ("Symfony", "symfony"), ("C++", "c++"), ("C#", "c#"),
    # One-edit misspellings (gold still maps to the canonical id).
    ("Javascrpt", "javascript"), ("Kubernets", "kubernetes"), ("Tensorflaw", "tensorflow"),
    ("Elasticsearh", "elasticsearch"),
]

# Surfaces that must NOT resolve to any lexicon entry (checked below).
DISTRACTOR_SKILLS = ["Fortran", "COBOL", "Prolog", "Photoshop", "AutoCAD"]

DEGREES_FR = [
    ("Master en Informatique, USTHB Alger", 3),
    ("Licence en Mathématiques, Université d'Oran", 2),
    ("Ingénieur d'État en Informatique, ESI Alger", 3),
    ("Doctorat en Informatique, Université de Constantine", 4),
    ("Baccalauréat Scientifique, Lycée El Idrissi", 1),
    ("Master Recherche en Intelligence Artificielle, USTHB", 3),
    ("Licence en Informatique, Université de Béjaïa", 2),
]
DEGREES_EN = [
    ("Master of Science in Computer Science, University of Algiers", 3),
    ("Bachelor of Science in Physics, University of Oran", 2),
    ("PhD in Applied Mathematics, USTHB", 4),
    ("High School Diploma, Algiers", 1),
    ("MSc in Computer Networks, ESI", 3),
    ("Bachelor of Science in Software Development, UMBB", 2),
]

TITLES_FR = [
    "Développeur Backend", "Développeuse Web", "Administrateur Systèmes",
    "Analyste de Données", "Chef de Projet Technique", "Développeur Mobile",
    "Consultant Technique", "Architecte Solutions",
]
TITLES_EN = [
    "Backend Developer", "Web Developer", "Systems Administrator",
    "Data Analyst", "Technical Project Lead", "Mobile Developer",
    "Technical Consultant", "Solutions Architect",
]
COMPANIES = [
    "TechSoft Algérie", "DataWave", "Numidia Systems", "Atlas Digital",
    "SaharaTech", "MedITech", "Djurdjura Labs", "Casbah Solutions",
]

CITIES = ["Alger", "Oran", "Constantine", "Annaba", "Béjaïa", "Tlemcen", "Sétif", "Blida"]

SUMMARY_FR = [
    "Passionné par la conception de systèmes distribués fiables.",
    "Curieuse, rigoureuse et orientée résultats.",
    "Intéressé par la qualité du code et l'automatisation.",
]
SUMMARY_EN = [
    "Focused on building reliable distributed systems.",
    "Curious, rigorous and delivery oriented.",
    "Keen on code quality and automation.",
]

LANG_LINES = [
    ("Français (langue maternelle), Anglais (courant)", ["fr", "en"]),
    ("Arabe (natif), Français (courant), Anglais (professionnel)", ["ar", "fr", "en"]),
    ("English (fluent), French (intermediate)", ["en", "fr"]),
    ("English (native), Arabic (conversational)", ["en", "ar"]),
    ("Français (courant), Espagnol (notions)", ["fr", "es"]),
]

MONTH_EN = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]
MONTH_FR = ["Janv", "Févr", "Mars", "Avril", "Mai", "Juin", "Juil", "Août", "Sept", "Oct", "Nov", "Déc"]
MONTH_EN_FULL = [
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
]
MONTH_FR_FULL = [
    "Janvier", "Février", "Mars", "Avril", "Mai", "Juin",
    "Juillet", "Août", "Septembre", "Octobre", "Novembre", "Décembre",
]


# --- independent oracles used only for authoring gold ----------------------


def _levenshtein(a: str, b: str) -> int:
    d = [[i + j if 0 in (i, j) else 0 for j in range(len(b) + 1)] for i in range(len(a) + 1)]
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            d[i][j] = min(
                d[i - 1][j] + 1,
                d[i][j - 1] + 1,
                d[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    return d[len(a)][len(b)]


def _check_distractors() -> None:
    import unicodedata

    lexicon = json.loads(
        (Path(__file__).resolve().parent.parent / "src/resumatch/data/skills.json").read_text("utf-8")
    )
    surfaces = []
    for entry in lexicon:
        surfaces.append(entry["canonical"])
        surfaces.extend(entry.get("aliases", []))

    def fold(s: str) -> str:
        decomp = unicodedata.normalize("NFD", s)
        return "".join(c for c in decomp if unicodedata.category(c) != "Mn").casefold()

    for distractor in DISTRACTOR_SKILLS:
        for surface in surfaces:
            a, b = fold(distractor), fold(surface)
            sim = 1 - _levenshtein(a, b) / max(len(a), len(b))
            assert sim < 0.80, f"distractor {distractor!r} too close to lexicon entry {surface!r} ({sim:.2f})"


def month_index(year: int, month: int) -> int:
    return year * 12 + (month - 1)


def months_covered(intervals: list[tuple[tuple[int, int], tuple[int, int]]]) -> int:
    covered: set[int] = set()
    for (y1, m1), (y2, m2) in intervals:
        covered.update(range(month_index(y1, m1), month_index(y2, m2) + 1))
    return len(covered)


def normalize_phone(raw: str) -> str:
    digits = re.sub(r"\D", "", raw)
    return ("+" if raw.strip().startswith("+") else "") + digits


# --- interval rendering -----------------------------------------------------


def render_interval(rng, lang: str, start, end, open_ended: bool) -> tuple[str, tuple, tuple]:
    """Text form plus the resolved (start, end) month tuples for gold."""
    (y1, m1), (y2, m2) = start, end
    style = rng.choice(["mname", "mname_full", "mmyyyy", "yyyy"])
    dash = rng.choice(["-", "–"])
    months_abbr = MONTH_FR if lang == "fr" else MONTH_EN
    months_full = MONTH_FR_FULL if lang == "fr" else MONTH_EN_FULL
    if open_ended:
        marker = rng.choice(["Aujourd'hui", "Présent"]) if lang == "fr" else rng.choice(["Present", "Current"])
        left = f"{months_abbr[m1 - 1]} {y1}" if style != "yyyy" else f"{months_full[m1 - 1]} {y1}"
        return f"{left} {dash} {marker}", (y1, m1), CLOCK
    if style == "mname":
        text = f"{months_abbr[m1 - 1]} {y1} {dash} {months_abbr[m2 - 1]} {y2}"
        return text, (y1, m1), (y2, m2)
    if style == "mname_full":
        text = f"{months_full[m1 - 1]} {y1} {dash} {months_full[m2 - 1]} {y2}"
        return text, (y1, m1), (y2, m2)
    if style == "mmyyyy":
        text = f"{m1:02d}/{y1} {dash} {m2:02d}/{y2}"
        return text, (y1, m1), (y2, m2)
    # year-only: expands to Jan..Dec
    text = f"{y1} {dash} {y2}"
    return text, (y1, 1), (y2, 12)


def make_intervals(rng, lang: str, count: int, allow_open: bool):
    """Non-pathological career history; intervals may overlap."""
    lines = []
    gold: list[tuple[tuple[int, int], tuple[int, int]]] = []
    year = rng.randint(2008, 2015)
    for i in range(count):
        start_y = year
        start_m = rng.randint(1, 12)
        duration = rng.randint(8, 40)  # months
        end_idx = month_index(start_y, start_m) + duration
        end_y, end_m = divmod(end_idx, 12)
        end_m += 1
        open_ended = allow_open and i == count - 1 and rng.random() < 0.7
        if open_ended:
            start_y = max(2019, min(start_y, CLOCK[0] - 1))
            start_m = rng.randint(1, 12)
            text, s, e = render_interval(rng, lang, (start_y, start_m), (start_y, start_m), True)
        else:
            text, s, e = render_interval(rng, lang, (start_y, start_m), (end_y, end_m), False)
        lines.append(text)
        gold.append((s, e))
        year = end_y + rng.choice([0, 0, 1])  # occasional overlap with next entry
    return lines, gold


# --- resume assembly --------------------------------------------------------


def wrap_for_column(text: str, font: str, size: float, max_width: float) -> list[str]:
    words = text.split()
    lines: list[str] = []
    current = ""
    for word in words:
        trial = f"{current} {word}".strip()
        if stringWidth(trial, font, size) <= max_width or not current:
            current = trial
        else:
            lines.append(current)
            current = word
    if current:
        lines.append(current)
    return lines


def build_resume(rng, index: int) -> dict:
    lang = "fr" if index % 2 == 0 else "en"
    given, family = PEOPLE[index]
    name_line = f"{family.upper()} {given}" if rng.random() < 0.5 else f"{given} {family.capitalize()}"
    city = rng.choice(CITIES)

    email = f"{given.lower()}.{family.lower().replace(' ', '')}@{rng.choice(['mail.dz', 'gmail.com', 'outlook.fr', 'yahoo.com'])}"
    has_phone = index != 7  # one resume without a phone
    phone_raw = rng.choice(
        [
            f"+213 {rng.randint(550, 799)} {rng.randint(10, 99)} {rng.randint(10, 99)} {rng.randint(10, 99)}",
            f"0{rng.randint(550, 799)} {rng.randint(10, 99)} {rng.randint(10, 99)} {rng.randint(10, 99)}",
            f"(0{rng.randint(21, 49)}) {rng.randint(20, 99)}-{rng.randint(10, 99)}-{rng.randint(10, 99)}",
        ]
    )
    street = rng.choice(["Rue Didouche Mourad", "Avenue de l'Indépendance", "Boulevard Zirout Youcef", "Rue des Frères Bouadou"])
    address = f"{rng.randint(1, 120)} {street}, {city}"

    # skills: 5..9 surfaces with distinct gold ids, plus 0..2 distractors
    chosen: list[tuple[str, str]] = []
    seen_ids: set[str] = set()
    for surface, gold_id in rng.sample(SKILLS, k=len(SKILLS)):
        if gold_id in seen_ids:
            continue
        chosen.append((surface, gold_id))
        seen_ids.add(gold_id)
        if len(chosen) >= rng.randint(5, 9):
            break
    distractors = rng.sample(DISTRACTOR_SKILLS, k=rng.choice([0, 1, 1, 2]))
    skill_surfaces = [s for s, _ in chosen] + distractors
    rng.shuffle(skill_surfaces)

    # education: none for two resumes (their titles avoid degree words)
    has_education = index not in (5, 18)
    degree_pool = DEGREES_FR if lang == "fr" else DEGREES_EN
    degrees = rng.sample(degree_pool, k=rng.randint(1, 2)) if has_education else []
    gold_education = max((lvl for _, lvl in degrees), default=0)

    # experience: one resume with no history at all
    has_experience = index != 11
    if has_experience:
        n_entries = rng.randint(1, 3)
        interval_lines, gold_intervals = make_intervals(rng, lang, n_entries, allow_open=index % 5 == 0)
    else:
        interval_lines, gold_intervals = [], []
    titles = TITLES_FR if lang == "fr" else TITLES_EN
    experience_lines = []
    for text in interval_lines:
        title = rng.choice(titles)
        company = rng.choice(COMPANIES)
        experience_lines.append(f"{title}, {company}")
        experience_lines.append(text)

    lang_line, gold_langs = rng.choice(LANG_LINES)

    headers = {
        "contact": rng.choice(["Contact", "Profil", "Informations Personnelles"]) if lang == "fr" else rng.choice(["Contact", "Personal Information", "Profile"]),
        "summary": rng.choice(["À propos", "Résumé"]) if lang == "fr" else rng.choice(["Summary", "Objective"]),
        "education": rng.choice(["Formation", "Études", "Formation"]) if lang == "fr" else rng.choice(["Education", "EDUCATION", "Educaton"]),
        "experience": rng.choice(["Expérience Professionnelle", "Parcours Professionnel", "EXPERIANCE"]) if lang == "fr" else rng.choice(["Work Experience", "Experience", "Professional Experience"]),
        "skills": rng.choice(["Compétences", "Compétences Techniques", "COMPETENCES"]) if lang == "fr" else rng.choice(["Skills", "Technical Skills", "SKILLS"]),
        "languages": "Langues" if lang == "fr" else "Languages",
    }

    summary = rng.choice(SUMMARY_FR if lang == "fr" else SUMMARY_EN)
    contact_lines = [f"Email : {email}" if lang == "fr" else f"Email: {email}"]
    if has_phone:
        label = "Téléphone" if lang == "fr" else "Phone"
        contact_lines.append(f"{label} : {phone_raw}" if lang == "fr" else f"{label}: {phone_raw}")
    contact_lines.append(f"Adresse : {address}" if lang == "fr" else f"Address: {address}")

    return {
        "lang": lang,
        "name_line": name_line,
        "headers": headers,
        "summary": summary,
        "contact_lines": contact_lines,
        "skill_surfaces": skill_surfaces,
        "degrees": [d for d, _ in degrees],
        "experience_lines": experience_lines,
        "lang_line": lang_line,
        "gold": {
            "name": name_line,
            "emails": [email],
            "phones": [normalize_phone(phone_raw)] if has_phone else [],
            "education": gold_education,
            "experience_months": months_covered(gold_intervals),
            "skills": sorted({gid for _, gid in chosen}),
            "languages": gold_langs,
        },
    }


# --- writers ----------------------------------------------------------------


def write_txt(resume: dict, path: Path) -> None:
    h = resume["headers"]
    lines = [resume["name_line"], ""]
    lines += [h["contact"]] + resume["contact_lines"] + [""]
    lines += [h["summary"], resume["summary"], ""]
    if resume["experience_lines"]:
        lines += [h["experience"]] + resume["experience_lines"] + [""]
    if resume["degrees"]:
        lines += [h["education"]] + resume["degrees"] + [""]
    lines += [h["skills"], ", ".join(resume["skill_surfaces"]), ""]
    lines += [h["languages"], resume["lang_line"], ""]
    path.write_text("\n".join(lines), "utf-8")


def _draw_lines(c, lines, x, y, width, body_font="Helvetica", body_size=10):
    rendered = []
    for kind, text in lines:
        if kind == "header":
            font, size, gap = "Helvetica-Bold", 11, 18
        elif kind == "name":
            font, size, gap = "Helvetica-Bold", 13, 20
        else:
            font, size, gap = body_font, body_size, 15
        for part in wrap_for_column(text, font, size, width):
            c.setFont(font, size)
            c.drawString(x, y, part)
            rendered.append(part)
            y -= gap
    return y, rendered


def wrap_skill_list(surfaces: list[str], width: float, font="Helvetica", size=10) -> list[str]:
    """Comma-join surfaces into lines, never splitting a surface mid-phrase."""
    lines: list[str] = []
    current = ""
    for surface in surfaces:
        trial = f"{current}, {surface}" if current else surface
        if stringWidth(trial + ",", font, size) <= width or not current:
            current = trial
        else:
            lines.append(current + ",")
            current = surface
    if current:
        lines.append(current)
    return lines


def _sectioned_lines(resume: dict, sections: list[str], skill_width: float) -> list[tuple[str, str]]:
    h = resume["headers"]
    out: list[tuple[str, str]] = []
    for section in sections:
        if section == "name":
            out.append(("name", resume["name_line"]))
        elif section == "contact":
            out.append(("header", h["contact"]))
            out += [("body", line) for line in resume["contact_lines"]]
        elif section == "summary":
            out.append(("header", h["summary"]))
            out.append(("body", resume["summary"]))
        elif section == "experience" and resume["experience_lines"]:
            out.append(("header", h["experience"]))
            out += [("body", line) for line in resume["experience_lines"]]
        elif section == "education" and resume["degrees"]:
            out.append(("header", h["education"]))
            out += [("body", line) for line in resume["degrees"]]
        elif section == "skills":
            out.append(("header", h["skills"]))
            out += [("body", line) for line in wrap_skill_list(resume["skill_surfaces"], skill_width)]
        elif section == "languages":
            out.append(("header", h["languages"]))
            out.append(("body", resume["lang_line"]))
    return out


def write_pdf_single(resume: dict, path: Path) -> list[str]:
    c = canvas.Canvas(str(path), pagesize=letter)
    lines = _sectioned_lines(
        resume,
        ["name", "contact", "summary", "experience", "education", "skills", "languages"],
        skill_width=460,
    )
    _, rendered = _draw_lines(c, lines, x=72, y=742, width=460)
    c.showPage()
    c.save()
    return rendered


def write_pdf_two_column(resume: dict, path: Path) -> list[str]:
    c = canvas.Canvas(str(path), pagesize=letter)
    left = _sectioned_lines(resume, ["name", "contact", "skills", "languages"], skill_width=210)
    right = _sectioned_lines(resume, ["summary", "experience", "education"], skill_width=240)
    _, left_rendered = _draw_lines(c, left, x=40, y=742, width=210)
    _, right_rendered = _draw_lines(c, right, x=330, y=742, width=240)
    c.showPage()
    c.save()
    # Reading order is column-major: the whole left column, then the right.
    return left_rendered + right_rendered


def main() -> None:
    _check_distractors()
    rng = random.Random(SEED)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for stale in OUT_DIR.glob("resume_*"):
        stale.unlink()

    manifest = {"clock": list(CLOCK), "resumes": [], "reading_order": {}}
    two_column_ids = {2, 9, 14, 21, 26, 29, 31}
    single_pdf_ids = {4, 12, 17, 24, 28}

    for index in range(len(PEOPLE)):
        resume = build_resume(rng, index)
        if index in two_column_ids:
            filename = f"resume_{index:02d}.pdf"
            rendered = write_pdf_two_column(resume, OUT_DIR / filename)
            layout = "pdf-two-column"
            manifest["reading_order"][filename] = rendered
        elif index in single_pdf_ids:
            filename = f"resume_{index:02d}.pdf"
            rendered = write_pdf_single(resume, OUT_DIR / filename)
            layout = "pdf-single-column"
            manifest["reading_order"][filename] = rendered
        else:
            filename = f"resume_{index:02d}.txt"
            write_txt(resume, OUT_DIR / filename)
            layout = "plain-text"
        entry = {"file": filename, "layout": layout, "lang": resume["lang"], **resume["gold"]}
        manifest["resumes"].append(entry)

    (OUT_DIR / "manifest.json").write_text(
        json.dumps(manifest, ensure_ascii=False, indent=1), "utf-8"
    )
    pdf_count = len(two_column_ids) + len(single_pdf_ids)
    print(f"wrote {len(PEOPLE)} resumes ({pdf_count} PDFs, {len(two_column_ids)} two-column) to {OUT_DIR}")


if __name__ == "__main__":
    main()
