# -*- coding: utf-8 -*-
"""
core/excel.py
Relatório Excel de uma experiência: uma folha com as linhas e outra com
o resumo e as violações.

Cores das linhas:
    verde     dentro de ⌊kn/(2k+1)⌋
    amarelo   membro de ℋ_k (limite ⌈kn/(2k+1)⌉)
    vermelho  alguma desigualdade violada
"""
from pathlib import Path

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from .experiments import REPORT_COLUMNS, Report

HEADERS = {
    "graph_id": "Grafo",
    "n": "n",
    "k": "k",
    "exact": "γ_k exato",
    "constructed": "Construído",
    "bound": "Limite",
    "in_hk": "Em ℋ_k",
    "note": "Nota",
}

WIDTHS = {"graph_id": 22, "note": 36}


class ReportWorkbook:
    """
    Construtor do Excel de um Report.

    Layout da folha principal:
    | Grafo | n | k | γ_k exato | Construído | Limite | Em ℋ_k | Nota |
    """

    def __init__(self, report: Report):
        self.report = report
        self.wb = Workbook()
        self.ws = self.wb.active
        self.ws.title = report.experiment[:31]
        self._setup_styles()

    def _setup_styles(self):
        """Define estilos reutilizáveis"""
        self.header_font = Font(bold=True, color="FFFFFF", size=11)
        self.header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
        self.header_align = Alignment(horizontal="center", vertical="center", wrap_text=True)

        thin_border = Side(border_style="thin", color="CCCCCC")
        self.border = Border(left=thin_border, right=thin_border, top=thin_border, bottom=thin_border)

        self.green_fill = PatternFill(start_color="C6EFCE", end_color="C6EFCE", fill_type="solid")
        self.yellow_fill = PatternFill(start_color="FFEB9C", end_color="FFEB9C", fill_type="solid")
        self.red_fill = PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid")

    def _header(self, ws, labels):
        ws.append(labels)
        for col in range(1, len(labels) + 1):
            cell = ws.cell(1, col)
            cell.font = self.header_font
            cell.fill = self.header_fill
            cell.alignment = self.header_align
            cell.border = self.border
        ws.freeze_panes = "A2"

    def _set_column_widths(self):
        for col, name in enumerate(REPORT_COLUMNS, 1):
            self.ws.column_dimensions[get_column_letter(col)].width = WIDTHS.get(name, 12)

    def _row_fill(self, row) -> PatternFill:
        if row.problems():
            return self.red_fill
        if row.in_hk:
            return self.yellow_fill
        return self.green_fill

    def add_rows(self):
        for row in self.report.rows:
            data = row.to_dict()
            self.ws.append(["sim" if data[name] is True else "não" if data[name] is False else data[name]
                            for name in REPORT_COLUMNS])
            row_num = self.ws.max_row
            fill = self._row_fill(row)
            for col in range(1, len(REPORT_COLUMNS) + 1):
                cell = self.ws.cell(row_num, col)
                cell.border = self.border
                cell.fill = fill
                cell.alignment = Alignment(horizontal="center" if col > 1 else "left", vertical="center")

    def add_summary(self):
        """Folha "Resumo": parâmetros, contagens e violações"""
        ws = self.wb.create_sheet("Resumo")
        self._header(ws, ["Campo", "Valor"])
        for key, value in self.report.params.items():
            ws.append([key, json_safe(value)])
        for key, value in self.report.summary().items():
            ws.append([key, value])
        for violation in self.report.violations:
            ws.append(["violação", violation])
            ws.cell(ws.max_row, 2).fill = self.red_fill
        ws.column_dimensions["A"].width = 16
        ws.column_dimensions["B"].width = 80

    def build(self):
        self._header(self.ws, [HEADERS[name] for name in REPORT_COLUMNS])
        self._set_column_widths()
        self.add_rows()
        self.add_summary()

    def save(self, path: Path):
        self.wb.save(path)


def json_safe(value):
    """Listas viram texto (as células só aceitam escalares)"""
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    return value
