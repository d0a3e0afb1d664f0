// "My Responses": latest response per labelled file with global search,
// per-column filters, multi-column sort, clear-all, CSV download, and
// row navigation back to the labelling dashboard for updates.

import type { Api } from "../api";
import { ResponsesTable } from "../table";

export class MyResponsesView {
  table: ResponsesTable;

  constructor(
    api: Api,
    navigate: (hash: string) => void,
  ) {
    this.table = new ResponsesTable({
      fetchRows: (query) => api.myResponses(query),
      fetchCsv: (query) => api.myResponsesCsv(query),
      onRowClick: (row) => navigate(`#/label/${row.file_id}`),
    });
  }

  async mount(root: HTMLElement): Promise<void> {
    root.innerHTML = `
      <div class="toolbar"><span class="toolbar-title">My Responses</span></div>
      <div class="responses-host"></div>
    `;
    await this.table.mount(root.querySelector<HTMLElement>(".responses-host")!);
  }
}
