// Administration dashboard: one navigation pane plus a functionality area
// for users, patterns, project upload/file management, all responses,
// upload status, and settings.

import type { Api } from "../api";
import { ApiError } from "../api";
import { ResponsesTable } from "../table";
import type { UploadJob } from "../types";

type Section =
  | "users"
  | "patterns"
  | "projects"
  | "responses"
  | "uploads"
  | "aggregates"
  | "settings";

const SECTIONS: Array<[Section, string]> = [
  ["users", "Users"],
  ["patterns", "Patterns"],
  ["projects", "Projects & files"],
  ["responses", "All responses"],
  ["uploads", "Upload status"],
  ["aggregates", "Agreement"],
  ["settings", "Settings"],
];

const JOBS_KEY = "labelsmith.admin.jobs";

export class AdminView {
  private root: HTMLElement | null = null;
  private area: HTMLElement | null = null;

  constructor(private api: Api) {}

  async mount(root: HTMLElement, section: Section = "users"): Promise<void> {
    this.root = root;
    root.innerHTML = `
      <div class="toolbar"><span class="toolbar-title">Administration</span>
        <span class="banner" role="alert" hidden></span></div>
      <div class="admin-layout">
        <nav class="admin-nav"><ul></ul></nav>
        <section class="admin-area"></section>
      </div>
    `;
    const list = root.querySelector("ul")!;
    for (const [key, label] of SECTIONS) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.href = `#/admin/${key}`;
      link.textContent = label;
      if (key === section) link.classList.add("current");
      item.appendChild(link);
      list.appendChild(item);
    }
    this.area = root.querySelector<HTMLElement>(".admin-area")!;
    await this.show(section);
  }

  private banner(message: string | null): void {
    const el = this.root!.querySelector<HTMLElement>(".banner")!;
    el.hidden = message === null;
    el.textContent = message ?? "";
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | undefined> {
    try {
      const result = await work();
      this.banner(null);
      return result;
    } catch (error) {
      const message =
        error instanceof ApiError && error.details.length
          ? `${error.message}: ${error.details.join("; ")}`
          : (error as Error).message;
      this.banner(message);
      return undefined;
    }
  }

  async show(section: Section): Promise<void> {
    switch (section) {
      case "users":
        return this.showUsers();
      case "patterns":
        return this.showPatterns();
      case "projects":
        return this.showProjects();
      case "responses":
        return this.showResponses();
      case "uploads":
        return this.showUploads();
      case "aggregates":
        return this.showAggregates();
      case "settings":
        return this.showSettings();
    }
  }

  private async showUsers(): Promise<void> {
    const area = this.area!;
    area.innerHTML = `
      <h2>Users</h2>
      <form class="create-user inline-form">
        <input name="email" type="email" placeholder="email" required />
        <input name="display_name" type="text" placeholder="display name" required />
        <select name="role">
          <option value="contributor">contributor</option>
          <option value="admin">admin</option>
        </select>
        <button type="submit">Enroll</button>
      </form>
      <table class="admin-table users-table">
        <thead><tr><th>Email</th><th>Name</th><th>Role</th><th>Demo</th>
          <th>Active</th><th></th></tr></thead>
        <tbody></tbody>
      </table>
    `;
    area.querySelector<HTMLFormElement>(".create-user")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        const data = new FormData(event.target as HTMLFormElement);
        void this.guard(() =>
          this.api.adminCreateUser({
            email: String(data.get("email")),
            display_name: String(data.get("display_name")),
            role: String(data.get("role")),
          }),
        ).then(() => this.showUsers());
      },
    );
    const users = await this.guard(() => this.api.adminUsers());
    if (!users) return;
    const tbody = area.querySelector("tbody")!;
    for (const user of users) {
      const tr = document.createElement("tr");
      tr.innerHTML = `
        <td>${escapeHtml(user.email)}</td>
        <td>${escapeHtml(user.display_name)}</td>
        <td>${user.role}</td>
        <td>${user.is_demo ? "yes" : ""}</td>
        <td>${user.is_active ? "yes" : "no"}</td>
      `;
      const actions = document.createElement("td");
      const toggle = document.createElement("button");
      toggle.type = "button";
      toggle.textContent = user.is_active ? "Deactivate" : "Reactivate";
      toggle.addEventListener("click", () => {
        void this.guard(() =>
          this.api.adminPatchUser(user.id, { is_active: !user.is_active }),
        ).then(() => this.showUsers());
      });
      actions.appendChild(toggle);
      tr.appendChild(actions);
      tbody.appendChild(tr);
    }
  }

  private async showPatterns(): Promise<void> {
    const area = this.area!;
    area.innerHTML = `
      <h2>Design patterns</h2>
      <form class="create-pattern inline-form">
        <input name="name" type="text" placeholder="pattern name" required />
        <button type="submit">Add</button>
      </form>
      <table class="admin-table patterns-table">
        <thead><tr><th>Name</th><th>Listed</th><th>Active</th><th></th></tr></thead>
        <tbody></tbody>
      </table>
    `;
    area.querySelector<HTMLFormElement>(".create-pattern")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        const data = new FormData(event.target as HTMLFormElement);
        void this.guard(() =>
          this.api.adminCreatePattern({ name: String(data.get("name")) }),
        ).then(() => this.showPatterns());
      },
    );
    const patterns = await this.guard(() => this.api.adminPatterns(true));
    if (!patterns) return;
    const tbody = area.querySelector("tbody")!;
    for (const pattern of patterns) {
      const tr = document.createElement("tr");
      tr.innerHTML = `
        <td>${escapeHtml(pattern.name)}</td>
        <td>${pattern.is_listed ? "listed" : "unlisted"}</td>
        <td>${pattern.is_active === false ? "no" : "yes"}</td>
      `;
      const actions = document.createElement("td");
      if (pattern.name !== "None") {
        const toggle = document.createElement("button");
        toggle.type = "button";
        toggle.textContent = pattern.is_active === false ? "Restore" : "Remove";
        toggle.addEventListener("click", () => {
          void this.guard(() =>
            this.api.adminPatchPattern(pattern.id, {
              is_active: pattern.is_active === false,
            }),
          ).then(() => this.showPatterns());
        });
        actions.appendChild(toggle);
      }
      tr.appendChild(actions);
      tbody.appendChild(tr);
    }
  }

  private rememberJob(job: UploadJob): void {
    const known: string[] = JSON.parse(localStorage.getItem(JOBS_KEY) ?? "[]");
    known.unshift(job.id);
    localStorage.setItem(JOBS_KEY, JSON.stringify(known.slice(0, 20)));
  }

  private async showProjects(): Promise<void> {
    const area = this.area!;
    area.innerHTML = `
      <h2>Project upload</h2>
      <form class="upload-form inline-form">
        <input name="name" type="text" placeholder="project name" required />
        <input name="archive" type="file" accept=".zip" required />
        <input name="required" type="number" min="1" placeholder="quota (default)" />
        <button type="submit">Upload ZIP</button>
      </form>
      <div class="upload-progress" role="status"></div>
      <h2>Files</h2>
      <select class="project-picker"></select>
      <table class="admin-table files-table">
        <thead><tr><th>Path</th><th>Quota</th><th>Accepting</th><th></th></tr></thead>
        <tbody></tbody>
      </table>
    `;
    const picker = area.querySelector<HTMLSelectElement>(".project-picker")!;
    const projects = (await this.guard(() => this.api.projects())) ?? [];
    for (const project of projects) {
      const option = document.createElement("option");
      option.value = project.id;
      option.textContent = project.name;
      picker.appendChild(option);
    }
    picker.addEventListener("change", () => void renderFiles(picker.value));

    const renderFiles = async (projectId: string) => {
      const tbody = area.querySelector<HTMLElement>(".files-table tbody")!;
      tbody.innerHTML = "";
      if (!projectId) return;
      const files = (await this.guard(() => this.api.projectFiles(projectId))) ?? [];
      for (const file of files) {
        const tr = document.createElement("tr");
        tr.innerHTML = `<td>${escapeHtml(file.relative_path)}</td>`;
        const quotaCell = document.createElement("td");
        const quota = document.createElement("input");
        quota.type = "number";
        quota.min = "1";
        quota.value = String(file.required_responses);
        quota.addEventListener("change", () => {
          void this.guard(() =>
            this.api.adminPatchFile(file.id, {
              required_responses: Number(quota.value),
            }),
          );
        });
        quotaCell.appendChild(quota);
        tr.appendChild(quotaCell);
        const state = document.createElement("td");
        state.textContent = file.is_accepting ? "accepting" : "deactivated";
        tr.appendChild(state);
        const actions = document.createElement("td");
        const toggle = document.createElement("button");
        toggle.type = "button";
        toggle.textContent = file.is_accepting ? "Deactivate" : "Reactivate";
        toggle.addEventListener("click", () => {
          void this.guard(() =>
            this.api.adminPatchFile(file.id, { is_accepting: !file.is_accepting }),
          ).then(() => renderFiles(projectId));
        });
        actions.appendChild(toggle);
        tr.appendChild(actions);
        tbody.appendChild(tr);
      }
    };
    if (projects.length) {
      picker.value = projects[0].id;
      await renderFiles(projects[0].id);
    }

    area.querySelector<HTMLFormElement>(".upload-form")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        const form = event.target as HTMLFormElement;
        const data = new FormData(form);
        const archive = data.get("archive") as File | null;
        if (!archive) return;
        const required = String(data.get("required") ?? "");
        void this.guard(() =>
          this.api.adminUploadProject(
            String(data.get("name")),
            archive,
            required ? Number(required) : undefined,
          ),
        ).then((job) => {
          if (job) {
            this.rememberJob(job);
            void this.pollJob(job.id, area.querySelector(".upload-progress")!);
          }
        });
      },
    );
  }

  async pollJob(jobId: string, target: Element): Promise<UploadJob | undefined> {
    for (;;) {
      const job = await this.guard(() => this.api.adminUploadStatus(jobId));
      if (!job) return undefined;
      target.textContent =
        `${job.state}: ${job.files_registered}/${job.files_total} registered` +
        (job.entries_skipped ? `, ${job.entries_skipped} skipped` : "") +
        (job.error_detail ? ` (${job.error_detail})` : "");
      if (job.state === "completed" || job.state === "failed") return job;
      await sleep(500);
    }
  }

  private async showResponses(): Promise<void> {
    const area = this.area!;
    area.innerHTML = `
      <h2>All responses</h2>
      <div class="responses-host"></div>
      <div class="history-panel" hidden>
        <h3>Edit history</h3>
        <ol class="history-list"></ol>
      </div>
    `;
    const table = new ResponsesTable({
      fetchRows: (query) => this.api.adminResponses(query),
      fetchCsv: (query) => this.api.adminResponsesCsv(query),
      onRowClick: (row) => {
        void this.guard(() => this.api.adminHistory(row.file_id, row.user_id)).then(
          (versions) => {
            if (!versions) return;
            const panel = area.querySelector<HTMLElement>(".history-panel")!;
            const list = panel.querySelector<HTMLElement>(".history-list")!;
            panel.hidden = false;
            list.innerHTML = "";
            for (const version of versions) {
              const item = document.createElement("li");
              item.textContent =
                `v${version.version_seq} at ${version.submitted_at}: ` +
                `${version.pattern_name} (confidence ${version.confidence_level}) - ` +
                version.summary;
              list.appendChild(item);
            }
          },
        );
      },
    });
    await table.mount(area.querySelector<HTMLElement>(".responses-host")!);
  }

  private async showUploads(): Promise<void> {
    const area = this.area!;
    area.innerHTML = `
      <h2>Upload status</h2>
      <table class="admin-table uploads-table">
        <thead><tr><th>Job</th><th>State</th><th>Registered</th><th>Skipped</th>
          <th>Detail</th></tr></thead>
        <tbody></tbody>
      </table>
      <p class="hint">Jobs started from this browser are tracked here.</p>
    `;
    const known: string[] = JSON.parse(localStorage.getItem(JOBS_KEY) ?? "[]");
    const tbody = area.querySelector("tbody")!;
    for (const jobId of known) {
      const job = await this.guard(() => this.api.adminUploadStatus(jobId));
      if (!job) continue;
      const tr = document.createElement("tr");
      tr.innerHTML = `
        <td>${escapeHtml(job.id.slice(0, 8))}</td>
        <td>${job.state}</td>
        <td>${job.files_registered}/${job.files_total}</td>
        <td>${job.entries_skipped}</td>
        <td>${escapeHtml(job.error_detail ?? "")}</td>
      `;
      tbody.appendChild(tr);
    }
  }

  private async showAggregates(): Promise<void> {
    const area = this.area!;
    area.innerHTML = `
      <h2>Agreement report</h2>
      <p class="mean-agreement"></p>
      <table class="admin-table aggregates-table">
        <thead><tr><th>Project</th><th>File</th><th>Consensus</th>
          <th>Agreement</th><th>Responders</th><th>Weights</th></tr></thead>
        <tbody></tbody>
      </table>
    `;
    const report = await this.guard(() => this.api.adminAggregates());
    if (!report) return;
    area.querySelector<HTMLElement>(".mean-agreement")!.textContent =
      report.mean_agreement === null
        ? "No labelled files yet."
        : `Corpus mean agreement: ${(report.mean_agreement * 100).toFixed(1)}%`;
    const tbody = area.querySelector("tbody")!;
    for (const entry of report.files) {
      const tr = document.createElement("tr");
      const weights = Object.entries(entry.weights)
        .map(([name, weight]) => `${name}: ${weight}`)
        .join(", ");
      tr.innerHTML = `
        <td>${escapeHtml(entry.project ?? "")}</td>
        <td>${escapeHtml(entry.file_path ?? "")}</td>
        <td>${escapeHtml(entry.consensus)}</td>
        <td>${(entry.agreement * 100).toFixed(1)}%</td>
        <td>${entry.responder_count}</td>
        <td>${escapeHtml(weights)}</td>
      `;
      tbody.appendChild(tr);
    }
  }

  private async showSettings(): Promise<void> {
    const area = this.area!;
    const settings = await this.guard(() => this.api.adminSettings());
    if (!settings) return;
    area.innerHTML = `
      <h2>Settings</h2>
      <form class="settings-form">
        <label>Default responses required per file
          <input name="default_required_responses" type="number" min="1"
                 value="${settings.default_required_responses}" />
        </label>
        <label>Demo mode
          <input name="demo_mode" type="checkbox" ${settings.demo_mode ? "checked" : ""} />
        </label>
        <label>Demo retention (days)
          <input name="demo_retention_days" type="number" min="0"
                 value="${settings.demo_retention_days}" />
        </label>
        <button type="submit">Save</button>
      </form>
    `;
    area.querySelector<HTMLFormElement>(".settings-form")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        const form = event.target as HTMLFormElement;
        const data = new FormData(form);
        void this.guard(() =>
          this.api.adminPatchSettings({
            default_required_responses: Number(data.get("default_required_responses")),
            demo_mode: data.get("demo_mode") === "on",
            demo_retention_days: Number(data.get("demo_retention_days")),
          }),
        ).then(() => this.showSettings());
      },
    );
  }
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
