// Three-pane labelling dashboard: project navigation, syntax-highlighted
// code viewer, and the response form with local draft autosave.

import type { Api } from "../api";
import { DraftWriter, clearDraft, loadDraft } from "../drafts";
import { renderCode } from "../highlight";
import type { FileMeta, FileView, ResponseFields, User } from "../types";

const UNLISTED = "__unlisted__";

const CONFIDENCE_LABELS = ["Very Low", "Low", "Medium", "High", "Very High"];

export class LabellingView {
  private root: HTMLElement | null = null;
  private current: FileView | null = null;
  private assignedFileId: string | null = null;
  private writer: DraftWriter | null = null;

  constructor(
    private api: Api,
    private user: User,
  ) {}

  async mount(root: HTMLElement, fileId?: string): Promise<void> {
    this.root = root;
    root.innerHTML = `
      <div class="toolbar">
        <button type="button" class="toggle-nav" title="Hide project pane">&#9776;</button>
        <span class="toolbar-title">Labelling</span>
        <span class="banner" role="alert" hidden></span>
      </div>
      <div class="labelling-layout">
        <aside class="nav-pane">
          <button type="button" class="back-to-assigned">Return to assigned file</button>
          <ul class="file-list"></ul>
        </aside>
        <section class="code-pane">
          <div class="file-path"></div>
          <pre class="code-view" tabindex="0"></pre>
        </section>
        <section class="response-pane">
          <form class="response-form">
            <label>Design pattern (or a lack thereof)
              <select name="pattern_choice" required></select>
            </label>
            <label class="unlisted-wrap" hidden>Unlisted pattern name
              <input type="text" name="pattern_custom" />
            </label>
            <label>Why this pattern?
              <textarea name="pattern_explanation" rows="3" required></textarea>
            </label>
            <fieldset class="confidence">
              <legend>Confidence</legend>
            </fieldset>
            <label>Why this confidence?
              <textarea name="confidence_explanation" rows="2" required></textarea>
            </label>
            <label>Code summary
              <textarea name="summary" rows="3" required></textarea>
            </label>
            <label>Notes (optional)
              <textarea name="notes" rows="2"></textarea>
            </label>
            <button type="submit" class="submit-response">Submit response</button>
          </form>
        </section>
      </div>
    `;

    const fieldset = root.querySelector<HTMLElement>(".confidence")!;
    for (let level = 1; level <= 5; level++) {
      const label = document.createElement("label");
      label.className = "confidence-option";
      const input = document.createElement("input");
      input.type = "radio";
      input.name = "confidence_level";
      input.value = String(level);
      input.required = true;
      label.appendChild(input);
      label.appendChild(
        document.createTextNode(` ${level} (${CONFIDENCE_LABELS[level - 1]})`),
      );
      fieldset.appendChild(label);
    }

    root.querySelector<HTMLButtonElement>(".toggle-nav")!.addEventListener("click", () => {
      root.querySelector<HTMLElement>(".nav-pane")!.classList.toggle("collapsed");
    });
    root.querySelector<HTMLButtonElement>(".back-to-assigned")!.addEventListener(
      "click",
      () => {
        if (this.assignedFileId) void this.openFile(this.assignedFileId);
      },
    );

    const select = root.querySelector<HTMLSelectElement>("select[name=pattern_choice]")!;
    try {
      const options = await this.api.patterns();
      for (const option of options) {
        const el = document.createElement("option");
        el.value = option.name;
        el.textContent = option.name;
        select.appendChild(el);
      }
    } catch (error) {
      this.showBanner(`Could not load pattern list: ${(error as Error).message}`);
    }
    const unlisted = document.createElement("option");
    unlisted.value = UNLISTED;
    unlisted.textContent = "Other (type an unlisted pattern)";
    select.appendChild(unlisted);
    select.addEventListener("change", () => {
      this.root!.querySelector<HTMLElement>(".unlisted-wrap")!.hidden =
        select.value !== UNLISTED;
    });

    const form = root.querySelector<HTMLFormElement>(".response-form")!;
    form.addEventListener("input", () => this.writer?.schedule(this.readForm()));
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });

    if (fileId) {
      await this.openFile(fileId);
    } else {
      await this.loadAssigned();
    }
  }

  private showBanner(message: string | null): void {
    const banner = this.root!.querySelector<HTMLElement>(".banner")!;
    banner.hidden = message === null;
    banner.textContent = message ?? "";
  }

  private async loadAssigned(): Promise<void> {
    try {
      const next = await this.api.nextFile();
      if (next.exhausted || !next.file) {
        this.assignedFileId = null;
        this.renderExhausted();
        return;
      }
      this.assignedFileId = next.file.id;
      await this.openFile(next.file.id);
    } catch (error) {
      this.showBanner(`Could not fetch the next file: ${(error as Error).message}`);
    }
  }

  private renderExhausted(): void {
    this.current = null;
    this.root!.querySelector<HTMLElement>(".file-path")!.textContent =
      "All available source files are labelled. Thank you!";
    this.root!.querySelector<HTMLElement>(".code-view")!.textContent = "";
  }

  async openFile(fileId: string): Promise<void> {
    this.writer?.flush();
    try {
      const view = await this.api.file(fileId);
      this.current = view;
      this.writer = new DraftWriter(this.user.id, fileId);
      this.renderFile(view);
      await this.renderNavigation(view);
      this.restoreDraft(view.id);
      this.showBanner(null);
    } catch (error) {
      this.showBanner(`Could not open file: ${(error as Error).message}`);
    }
  }

  private renderFile(view: FileView): void {
    const pathEl = this.root!.querySelector<HTMLElement>(".file-path")!;
    pathEl.textContent = `${view.project_name}/${view.relative_path}`;
    const code = this.root!.querySelector<HTMLElement>(".code-view")!;
    code.innerHTML = "";
    code.appendChild(renderCode(view.content, view.tokens));
  }

  private async renderNavigation(view: FileView): Promise<void> {
    const list = this.root!.querySelector<HTMLElement>(".file-list")!;
    list.innerHTML = "";
    let files: FileMeta[] = [];
    try {
      files = await this.api.projectFiles(view.project_id);
    } catch {
      return; // navigation is best-effort; the code pane already rendered
    }
    for (const file of files) {
      const item = document.createElement("li");
      const link = document.createElement("button");
      link.type = "button";
      link.className = "file-link";
      link.dataset.fileId = file.id;
      link.textContent = file.relative_path;
      if (file.id === view.id) link.classList.add("current");
      if (file.id === this.assignedFileId) link.classList.add("assigned");
      link.addEventListener("click", () => void this.openFile(file.id));
      item.appendChild(link);
      list.appendChild(item);
    }
  }

  readForm(): ResponseFields {
    const form = this.root!.querySelector<HTMLFormElement>(".response-form")!;
    const data = new FormData(form);
    const choice = String(data.get("pattern_choice") ?? "");
    const pattern =
      choice === UNLISTED ? String(data.get("pattern_custom") ?? "") : choice;
    return {
      pattern_name: pattern,
      pattern_explanation: String(data.get("pattern_explanation") ?? ""),
      confidence_level: Number(data.get("confidence_level") ?? 0),
      confidence_explanation: String(data.get("confidence_explanation") ?? ""),
      summary: String(data.get("summary") ?? ""),
      notes: String(data.get("notes") ?? ""),
    };
  }

  private writeForm(fields: ResponseFields): void {
    const form = this.root!.querySelector<HTMLFormElement>(".response-form")!;
    const select = form.querySelector<HTMLSelectElement>("select[name=pattern_choice]")!;
    const known = Array.from(select.options).some(
      (o) => o.value === fields.pattern_name,
    );
    if (known && fields.pattern_name !== "") {
      select.value = fields.pattern_name;
      this.root!.querySelector<HTMLElement>(".unlisted-wrap")!.hidden = true;
    } else if (fields.pattern_name !== "") {
      select.value = UNLISTED;
      form.querySelector<HTMLInputElement>("input[name=pattern_custom]")!.value =
        fields.pattern_name;
      this.root!.querySelector<HTMLElement>(".unlisted-wrap")!.hidden = false;
    }
    form.querySelector<HTMLTextAreaElement>("[name=pattern_explanation]")!.value =
      fields.pattern_explanation;
    if (fields.confidence_level >= 1 && fields.confidence_level <= 5) {
      const radio = form.querySelector<HTMLInputElement>(
        `input[name=confidence_level][value="${fields.confidence_level}"]`,
      );
      if (radio) radio.checked = true;
    }
    form.querySelector<HTMLTextAreaElement>("[name=confidence_explanation]")!.value =
      fields.confidence_explanation;
    form.querySelector<HTMLTextAreaElement>("[name=summary]")!.value = fields.summary;
    form.querySelector<HTMLTextAreaElement>("[name=notes]")!.value = fields.notes;
  }

  private clearForm(): void {
    const form = this.root!.querySelector<HTMLFormElement>(".response-form")!;
    form.reset();
    this.root!.querySelector<HTMLElement>(".unlisted-wrap")!.hidden = true;
  }

  private restoreDraft(fileId: string): void {
    this.clearForm();
    const draft = loadDraft(this.user.id, fileId);
    if (draft) this.writeForm(draft);
  }

  private async submit(): Promise<void> {
    if (!this.current) return;
    const fileId = this.current.id;
    const button = this.root!.querySelector<HTMLButtonElement>(".submit-response")!;
    button.disabled = true;
    try {
      this.writer?.cancel();
      await this.api.submitResponse(fileId, this.readForm());
      clearDraft(this.user.id, fileId);
      this.clearForm();
      this.showBanner(null);
      await this.loadAssigned();
    } catch (error) {
      // drafts survive failures; re-arm the writer with current content
      this.writer?.schedule(this.readForm());
      this.showBanner(`Submission failed: ${(error as Error).message}`);
    } finally {
      button.disabled = false;
    }
  }
}
