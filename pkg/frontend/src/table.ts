// Sortable/filterable responses table. Filtering and ordering are done by
// the server; this component only manages the query controls and re-fetches,
// so the table and its CSV export always come from the same server query.

import type { ResponseRow, ResponseTable, SortDirection, TableQuery } from "./types";
import { EXPORT_COLUMNS } from "./types";

export interface TableCallbacks {
  fetchRows(query: TableQuery): Promise<ResponseTable>;
  fetchCsv(query: TableQuery): Promise<string>;
  onRowClick?(row: ResponseRow): void;
}

const COLUMN_LABELS: Record<string, string> = {
  project: "Project",
  file_path: "File",
  contributor_email: "Contributor",
  pattern: "Pattern",
  pattern_explanation: "Pattern explanation",
  confidence_level: "Confidence",
  confidence_explanation: "Confidence explanation",
  summary: "Summary",
  notes: "Notes",
  version_seq: "Version",
  submitted_at: "Submitted",
};

export function emptyQuery(): TableQuery {
  return { q: "", filters: {}, sorts: [] };
}

export class ResponsesTable {
  query: TableQuery = emptyQuery();
  lastCsv: string | null = null;
  private root: HTMLElement | null = null;

  constructor(private callbacks: TableCallbacks) {}

  async mount(root: HTMLElement): Promise<void> {
    this.root = root;
    root.innerHTML = `
      <div class="table-toolbar">
        <input type="search" class="global-search" placeholder="Search all columns"
               aria-label="Global search" />
        <button type="button" class="clear-all">Clear filters &amp; sort</button>
        <button type="button" class="download-csv">Download CSV</button>
      </div>
      <div class="table-scroll">
        <table class="responses-table">
          <thead>
            <tr class="header-row"></tr>
            <tr class="filter-row"></tr>
          </thead>
          <tbody></tbody>
        </table>
      </div>
      <div class="table-status" role="status"></div>
    `;
    const headerRow = root.querySelector<HTMLTableRowElement>(".header-row")!;
    const filterRow = root.querySelector<HTMLTableRowElement>(".filter-row")!;
    for (const column of EXPORT_COLUMNS) {
      const th = document.createElement("th");
      const button = document.createElement("button");
      button.type = "button";
      button.className = "sort-toggle";
      button.dataset.column = column;
      button.textContent = COLUMN_LABELS[column] ?? column;
      button.addEventListener("click", () => this.toggleSort(column));
      th.appendChild(button);
      headerRow.appendChild(th);

      const filterCell = document.createElement("th");
      const input = document.createElement("input");
      input.type = "text";
      input.className = "column-filter";
      input.dataset.column = column;
      input.placeholder = "filter";
      input.setAttribute("aria-label", `Filter ${COLUMN_LABELS[column] ?? column}`);
      input.addEventListener("change", () => {
        this.query.filters = { ...this.query.filters, [column]: input.value };
        void this.refresh();
      });
      filterCell.appendChild(input);
      filterRow.appendChild(filterCell);
    }

    root.querySelector<HTMLInputElement>(".global-search")!.addEventListener(
      "change",
      (event) => {
        this.query.q = (event.target as HTMLInputElement).value;
        void this.refresh();
      },
    );
    root.querySelector<HTMLButtonElement>(".clear-all")!.addEventListener("click", () => {
      this.query = emptyQuery();
      for (const input of root.querySelectorAll<HTMLInputElement>(".column-filter")) {
        input.value = "";
      }
      root.querySelector<HTMLInputElement>(".global-search")!.value = "";
      void this.refresh();
    });
    root.querySelector<HTMLButtonElement>(".download-csv")!.addEventListener(
      "click",
      () => void this.download(),
    );
    await this.refresh();
  }

  toggleSort(column: string): void {
    const existing = this.query.sorts.findIndex(([c]) => c === column);
    if (existing === -1) {
      this.query.sorts = [...this.query.sorts, [column, "asc" as SortDirection]];
    } else {
      const [, direction] = this.query.sorts[existing];
      const next = [...this.query.sorts];
      if (direction === "asc") {
        next[existing] = [column, "desc"];
      } else {
        next.splice(existing, 1);
      }
      this.query.sorts = next;
    }
    void this.refresh();
  }

  async refresh(): Promise<void> {
    if (!this.root) return;
    const status = this.root.querySelector<HTMLElement>(".table-status")!;
    try {
      const table = await this.callbacks.fetchRows(this.query);
      this.renderRows(table.rows);
      status.textContent = `${table.total} response(s)`;
      status.classList.remove("error");
    } catch (error) {
      status.textContent = `Could not load responses: ${(error as Error).message}`;
      status.classList.add("error");
    }
  }

  private renderRows(rows: ResponseRow[]): void {
    const tbody = this.root!.querySelector("tbody")!;
    tbody.innerHTML = "";
    for (const row of rows) {
      const tr = document.createElement("tr");
      tr.className = "response-row";
      tr.dataset.fileId = row.file_id;
      tr.dataset.userId = row.user_id;
      for (const column of EXPORT_COLUMNS) {
        const td = document.createElement("td");
        td.dataset.column = column;
        td.textContent = String(row[column]);
        tr.appendChild(td);
      }
      if (this.callbacks.onRowClick) {
        tr.addEventListener("click", () => this.callbacks.onRowClick!(row));
      }
      tbody.appendChild(tr);
    }
  }

  visibleCells(): string[][] {
    const out: string[][] = [];
    for (const tr of this.root!.querySelectorAll<HTMLTableRowElement>("tbody tr")) {
      out.push(
        Array.from(tr.querySelectorAll("td")).map((td) => td.textContent ?? ""),
      );
    }
    return out;
  }

  async download(): Promise<string> {
    const csv = await this.callbacks.fetchCsv(this.query);
    this.lastCsv = csv;
    triggerDownload(csv, "responses.csv");
    return csv;
  }
}

function triggerDownload(content: string, filename: string): void {
  if (typeof URL.createObjectURL !== "function") return; // test environment
  const blob = new Blob([content], { type: "text/csv;charset=utf-8" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

/** Minimal RFC 4180 parser used to compare a CSV export with the table. */
export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let row: string[] = [];
  let field = "";
  let quoted = false;
  let i = 0;
  while (i < text.length) {
    const c = text[i];
    if (quoted) {
      if (c === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
        } else {
          quoted = false;
          i += 1;
        }
      } else {
        field += c;
        i += 1;
      }
    } else if (c === '"' && field === "") {
      quoted = true;
      i += 1;
    } else if (c === ",") {
      row.push(field);
      field = "";
      i += 1;
    } else if (c === "\r" && text[i + 1] === "\n") {
      row.push(field);
      rows.push(row);
      row = [];
      field = "";
      i += 2;
    } else if (c === "\n") {
      row.push(field);
      rows.push(row);
      row = [];
      field = "";
      i += 1;
    } else {
      field += c;
      i += 1;
    }
  }
  if (field !== "" || row.length > 0) {
    row.push(field);
    rows.push(row);
  }
  return rows;
}
