// Sign-in screen: OAuth code exchange plus the optional demo session.

import type { Api } from "../api";
import { ApiError } from "../api";
import type { AuthResult } from "../types";

export class LoginView {
  constructor(
    private api: Api,
    private onSignedIn: (auth: AuthResult) => void,
  ) {}

  async mount(root: HTMLElement): Promise<void> {
    root.innerHTML = `
      <div class="login-card">
        <h1>Labelsmith</h1>
        <p>Label Java source files with design patterns and summaries.</p>
        <form class="oauth-form inline-form">
          <input name="code" type="text" placeholder="authorization code" required />
          <button type="submit">Sign in</button>
        </form>
        <button type="button" class="demo-login">Try a demo session</button>
        <p class="login-error" role="alert" hidden></p>
      </div>
    `;
    const error = root.querySelector<HTMLElement>(".login-error")!;

    const finish = async (work: () => Promise<AuthResult>) => {
      error.hidden = true;
      try {
        this.onSignedIn(await work());
      } catch (err) {
        error.hidden = false;
        error.textContent =
          err instanceof ApiError && err.status === 404
            ? "Demo mode is not enabled on this server."
            : (err as Error).message;
      }
    };

    root.querySelector<HTMLFormElement>(".oauth-form")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        const code = String(
          new FormData(event.target as HTMLFormElement).get("code") ?? "",
        );
        void finish(() => this.api.oauthCallback(code));
      },
    );
    root.querySelector<HTMLButtonElement>(".demo-login")!.addEventListener(
      "click",
      () => void finish(() => this.api.demoLogin()),
    );

    // an IdP redirect lands back here with ?code=...
    const params = new URLSearchParams(window.location.search);
    const code = params.get("code");
    if (code) {
      window.history.replaceState({}, "", window.location.pathname);
      await finish(() => this.api.oauthCallback(code));
    }
  }
}
